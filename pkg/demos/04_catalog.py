# coding: utf-8

# # Enumerating small AG-groupoids
#
# Tables are filled cell by cell; a branch is cut the moment a completed
# instance of the left invertive law fails. Keeping only tables that equal
# their own canonical form gives one representative per isomorphism class.

# In[1]:

import time

from agfuzzy import enumerate_ag_groupoids, classify_structure
from agfuzzy.catalog import brute_force_count

for n in (1, 2, 3):
    labelled = sum(1 for _ in enumerate_ag_groupoids(n))
    iso = sum(1 for _ in enumerate_ag_groupoids(n, up_to_iso=True))
    print(f"n={n}: {labelled} labelled, {iso} up to isomorphism")

print("brute force over all 3^9 tables:", brute_force_count(3))


# Order 4 still takes a few seconds.

# In[2]:

t = time.perf_counter()
reps = list(enumerate_ag_groupoids(4, up_to_iso=True))
print(len(reps), f"classes of order 4 in {time.perf_counter() - t:.1f}s")


# ## Structure of the order-3 classes

# In[3]:

for G in enumerate_ag_groupoids(3, up_to_iso=True):
    p = classify_structure(G)
    r = p.regularity
    print(G.flat(), "ident" if p.has_left_identity else "     ",
          "regular" if r.regular else "       ", "weakly-regular" if r.weakly_regular else "")


# ## Catalog files
#
# A catalog file stores each table with its profile; loading re-checks both.

# In[4]:

import tempfile, os
from agfuzzy import save_catalog, load_catalog
from agfuzzy.catalog import make_entry

path = os.path.join(tempfile.mkdtemp(), "order3.cat")
save_catalog([make_entry(G) for G in enumerate_ag_groupoids(3, up_to_iso=True)], path, 3)
print(open(path).read().splitlines()[0])
print(len(load_catalog(path)), "entries reloaded")
