# coding: utf-8

# # Fuzzy points and two ways to say "ideal"
#
# A fuzzy point x_t belongs to f when f(x) >= t and is quasi-coincident with
# it when f(x) + t > 1. Ideal notions built from these relations quantify over
# every t in (0,1]. The library decides them exactly by testing one threshold
# per breakpoint and one per gap between breakpoints.

# In[1]:

from fractions import Fraction

from agfuzzy import FuzzyPoint, point_relation, check_quantifier, check_threshold_k, check_classic
from agfuzzy.fixtures import five_element_grades
from agfuzzy.ideals import critical_thresholds

f = five_element_grades()
p = FuzzyPoint(2, Fraction(1, 2))          # c at level 1/2; f(c) = 3/10
print("in:", point_relation(f, p, "∈"), " q:", point_relation(f, p, "q"),
      " q_k (k=1/2):", point_relation(f, p, "q_k", k=Fraction(1, 2)))

print("thresholds tried for f at k=0:", [str(t) for t in critical_thresholds(set(f.grades))])


# The (in, in-or-q_k) form has an equivalent inequality form where every bound
# is capped at (1-k)/2. Both are implemented independently, so they can be
# compared.

# In[2]:

for k in (0, Fraction(1, 5), Fraction(1, 2)):
    q = check_quantifier(f, "bi-ideal", "∈", "∈∨q_k", k)
    ineq = check_threshold_k(f, "bi-ideal", k)
    print(f"k={k}: quantifier {q.holds}, inequality {ineq.holds}")


# ## A thresholded ideal that is not a classic one
#
# The cap at (1-k)/2 makes the thresholded notion weaker. A two-element
# example shows the gap: a search over the small catalog finds it quickly.

# In[3]:

from agfuzzy import catalog, search_counterexample, COARSE_GRID

res = search_counterexample("classic-vs-k-gap", catalog(2), COARSE_GRID, 0)
cx = res.counterexample
g = cx.operands[0]
print("table:", cx.groupoid.table, " f:", [str(v) for v in g.grades])
print("thresholded left ideal:", check_threshold_k(g, "left-ideal", 0).holds)
print("classic left ideal:    ", check_classic(g, "left-ideal").holds)
