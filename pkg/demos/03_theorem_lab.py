# coding: utf-8

# # Checking characterizations on a concrete groupoid
#
# Each registry entry turns a statement like "for every right ideal f and left
# ideal g, f meet_k g = f o_k g" into a finite check: f and g range over all
# grid-valued subsets passing the relevant filter. That is evidence on a
# population, not a proof, and every report says so.

# In[1]:

from agfuzzy import verify_theorem, COARSE_GRID
from agfuzzy.fixtures import six_element
from agfuzzy.theorems import get_theorem

S6 = six_element()
rep = verify_theorem(S6, "TH22", COARSE_GRID, k=0)
print(get_theorem("TH22").citation)
print("side conditions:", rep.conditions)
for v in rep.variants:
    print(v.name, "holds" if v.holds else "fails", "population", v.population, "checked", v.checked)


# ## Literal versus truncated readings
#
# Some equalities only make sense with the right side capped at (1-k)/2. The
# registry carries both readings. The literal one is reported but not relied on.

# In[2]:

rep = verify_theorem(S6, "T4.4-i-idem-eq", COARSE_GRID, k=0)
for v in rep.variants:
    line = f"{v.name:10s} pinned={v.pinned} holds={v.holds}"
    if v.counterexample:
        cx = v.counterexample.as_dict()
        line += f"  e.g. f={cx['operands'][0]} at {cx['element']}: {cx['lhs']} vs {cx['rhs']}"
    print(line)


# Counterexample reports keep their operands, so they can be replayed.

# In[3]:

cx = rep.variant("literal").counterexample
print("replays:", cx.reproduces())


# ## Sampling instead of enumerating
#
# On the default five-point grid a six-element groupoid has 15625 subsets.
# A seeded sample keeps runs short and still reproducible.

# In[4]:

from agfuzzy import DEFAULT_GRID

rep = verify_theorem(S6, "TH28", DEFAULT_GRID, k=0, mode="sample", seed=5, count=300)
print(rep.mode, "->", "holds" if rep.holds else "fails")
