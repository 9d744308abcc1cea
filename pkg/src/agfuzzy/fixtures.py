"""The two worked-example groupoids and the example fuzzy subset."""

from fractions import Fraction

from .fuzzy import FuzzySubset
from .groupoid import Groupoid, build_groupoid

_S5 = """\
a a a a a
a b b b b
a b d e c
a b c d e
a b e c d
"""

_S6 = """\
6 1 2 3 4 5
5 6 1 2 3 4
4 5 6 1 2 3
3 4 5 6 1 2
2 3 4 5 6 1
1 2 3 4 5 6
"""


def _from_names(text: str, names: list, name: str) -> Groupoid:
    idx = {s: i for i, s in enumerate(names)}
    rows = [[idx[tok] for tok in line.split()] for line in text.splitlines()]
    return build_groupoid(len(names), rows, names, name)


def five_element() -> Groupoid:
    """AG-groupoid on {a,...,e} with left identity d."""
    return _from_names(_S5, list("abcde"), "S5")


def six_element() -> Groupoid:
    """AG-groupoid on {1,...,6} with left identity 6; weakly regular."""
    return _from_names(_S6, [str(i) for i in range(1, 7)], "S6")


def five_element_grades() -> FuzzySubset:
    """f(a)=0.8, f(b)=0.7, f(c)=f(d)=f(e)=0.3."""
    return FuzzySubset(five_element(), [Fraction(4, 5), Fraction(7, 10)] + [Fraction(3, 10)] * 3)


def left_zero() -> Groupoid:
    """x*y = x on two elements; not left invertive."""
    return build_groupoid(2, [[0, 0], [1, 1]], name="left-zero")


def cyclic2() -> Groupoid:
    return build_groupoid(2, [[0, 1], [1, 0]], name="Z2")


def trivial() -> Groupoid:
    return build_groupoid(1, [[0]], name="trivial")


# (element, x, y) with element = (element*x)(element*y), as listed for S6
SIX_ELEMENT_WEAK_WITNESSES = (
    ("1", "2", "3"),
    ("2", "4", "6"),
    ("3", "6", "3"),
    ("4", "2", "6"),
    ("5", "4", "3"),
    ("6", "6", "6"),
)
