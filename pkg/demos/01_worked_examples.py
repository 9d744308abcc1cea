# coding: utf-8

# # Two small AG-groupoids
#
# A groupoid is just a Cayley table. An AG-groupoid is one where the left
# invertive law (ab)c = (cb)a holds for every triple. This notebook loads the
# two bundled tables and looks at their laws, ideals and one fuzzy subset.

# In[1]:

from agfuzzy import check_law, find_left_identity, enumerate_crisp, level_intervals
from agfuzzy.fixtures import five_element, five_element_grades, six_element

S5 = five_element()
for row in S5.table:
    print(" ".join(S5.label(v) for v in row))


# Every law check is exhaustive over all triples (or quadruples), done as one
# numpy comparison. A failing law comes back with its first witness.

# In[2]:

for law in ("left-invertive", "medial", "paramedial", "commutative", "associative"):
    rep = check_law(S5, law)
    print(f"{law:15s}", "holds" if rep.holds else f"fails at {[S5.label(x) for x in rep.witness]}")

print("left identity:", S5.label(find_left_identity(S5)))


# Crisp bi-ideals are found by filtering the powerset.

# In[3]:

for A in enumerate_crisp(S5, "bi-ideal"):
    print(S5.labels(A))


# ## A fuzzy subset and its level sets
#
# Grades are exact fractions, so 0.3 really is 3/10 and the interval
# boundaries come out exactly.

# In[4]:

f = five_element_grades()
print(f.as_dict())
for lo, hi, A in level_intervals(f):
    print(f"t in ({lo}, {hi}]  ->  {S5.labels(A) or '{}'}")


# ## The six-element table
#
# It has left identity 6 and is weakly regular: every a can be written as
# (ax)(ay). Here is one witness pair per element.

# In[5]:

from agfuzzy import regularity_profile

S6 = six_element()
prof = regularity_profile(S6)
print("left identity:", S6.label(prof.left_identity))
for a, (x, y) in prof.weakly_regular_witnesses.items():
    print(f"{S6.label(a)} = ({S6.label(a)}*{S6.label(x)})({S6.label(a)}*{S6.label(y)})")
