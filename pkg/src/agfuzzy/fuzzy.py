"""Exact-rational fuzzy subsets of a finite groupoid and their operators.

Grades are :class:`fractions.Fraction` values in [0, 1].  Nothing in here
touches binary floating point: decimal strings such as ``"0.3"`` are read
as the exact fraction 3/10, and float inputs are converted through their
shortest decimal repr.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .groupoid import Groupoid

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)


class FuzzyError(ValueError):
    pass


def grade(value) -> Fraction:
    """Coerce ``value`` to an exact grade in [0, 1]."""
    if isinstance(value, Fraction):
        g = value
    elif isinstance(value, float):
        g = Fraction(repr(value))
    elif isinstance(value, str):
        try:
            g = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise FuzzyError(f"cannot parse grade {value!r}") from None
    else:
        g = Fraction(value)
    if not ZERO <= g <= ONE:
        raise FuzzyError(f"grade {g} outside [0,1]")
    return g


def fmt(g: Fraction) -> str:
    return str(g)


@dataclass(frozen=True)
class KParam:
    """The parameter k in [0,1) of the q_k relation."""

    k: Fraction = ZERO

    def __post_init__(self):
        k = Fraction(self.k) if not isinstance(self.k, (float, str)) else grade(self.k)
        if not ZERO <= k < ONE:
            raise FuzzyError(f"k must lie in [0,1), got {k}")
        object.__setattr__(self, "k", k)

    @property
    def theta(self) -> Fraction:
        return (1 - self.k) / 2

    def __str__(self) -> str:
        return str(self.k)


def as_k(k) -> KParam:
    return k if isinstance(k, KParam) else KParam(k)


class FuzzySubset:
    """A map from the elements of ``groupoid`` to exact grades."""

    __slots__ = ("groupoid", "grades", "_hash")

    def __init__(self, groupoid: Groupoid, grades: Iterable):
        gs = tuple(grade(v) for v in grades)
        if len(gs) != groupoid.order:
            raise FuzzyError(f"expected {groupoid.order} grades, got {len(gs)}")
        self._set(groupoid, gs)

    def _set(self, groupoid, gs):
        object.__setattr__(self, "groupoid", groupoid)
        object.__setattr__(self, "grades", gs)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, groupoid: Groupoid, grades: tuple) -> "FuzzySubset":
        f = cls.__new__(cls)
        f._set(groupoid, grades)
        return f

    def __setattr__(self, name, value):
        raise AttributeError("FuzzySubset is immutable")

    def __getitem__(self, x: int) -> Fraction:
        return self.grades[x]

    def __len__(self) -> int:
        return len(self.grades)

    def __iter__(self):
        return iter(self.grades)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzySubset):
            return NotImplemented
        return self.grades == other.grades and self.groupoid == other.groupoid

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.grades))
        return self._hash

    def __le__(self, other: "FuzzySubset") -> bool:
        """Fuzzy inclusion: pointwise <=."""
        _same(self, other)
        return all(a <= b for a, b in zip(self.grades, other.grades))

    def __ge__(self, other: "FuzzySubset") -> bool:
        return other <= self

    def __repr__(self) -> str:
        return "FuzzySubset(" + ", ".join(map(str, self.grades)) + ")"

    def as_dict(self) -> dict:
        return {self.groupoid.label(i): str(g) for i, g in enumerate(self.grades)}


@dataclass(frozen=True)
class FuzzyPoint:
    element: int
    t: Fraction

    def __post_init__(self):
        t = grade(self.t)
        if t <= 0:
            raise FuzzyError("a fuzzy point needs t in (0,1]")
        object.__setattr__(self, "t", t)


def _same(f: FuzzySubset, g: FuzzySubset) -> None:
    if f.groupoid is not g.groupoid and f.groupoid != g.groupoid:
        raise FuzzyError("fuzzy subsets live on different groupoids")


# ---------------------------------------------------------------- constructors

def fuzzy(G: Groupoid, grades) -> FuzzySubset:
    if isinstance(grades, dict):
        missing = [G.label(i) for i in G.elements
                   if G.label(i) not in grades and i not in grades]
        if missing:
            raise FuzzyError("unassigned: " + ", ".join(missing))
        grades = [grades.get(G.label(i), grades.get(i)) for i in G.elements]
    return FuzzySubset(G, grades)


def constant(G: Groupoid, c) -> FuzzySubset:
    c = grade(c)
    return FuzzySubset._trusted(G, (c,) * G.order)


def characteristic(G: Groupoid, A: Iterable[int]) -> FuzzySubset:
    A = set(A)
    return FuzzySubset._trusted(G, tuple(ONE if x in A else ZERO for x in G.elements))


# ---------------------------------------------------------------- operators

def meet(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _same(f, g)
    return FuzzySubset._trusted(f.groupoid, tuple(map(min, f.grades, g.grades)))


def join(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _same(f, g)
    return FuzzySubset._trusted(f.groupoid, tuple(map(max, f.grades, g.grades)))


def pointwise(f: FuzzySubset, g: FuzzySubset, op: str) -> FuzzySubset:
    if op == "meet":
        return meet(f, g)
    if op == "join":
        return join(f, g)
    raise FuzzyError(f"unknown pointwise op {op!r}")


def conv_product(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    """Sup-min product: (f o g)(a) = max over b*c = a of min(f(b), g(c))."""
    _same(f, g)
    G = f.groupoid
    out = [ZERO] * G.order
    fg, gg = f.grades, g.grades
    for b, row in enumerate(G.table):
        fb = fg[b]
        if not fb:
            continue
        for c, a in enumerate(row):
            v = gg[c]
            if fb < v:
                v = fb
            if v > out[a]:
                out[a] = v
    return FuzzySubset._trusted(G, tuple(out))


def truncate_k(f: FuzzySubset, k) -> FuzzySubset:
    """f_k(x) = min(f(x), (1-k)/2)."""
    theta = as_k(k).theta
    return FuzzySubset._trusted(f.groupoid, tuple(v if v <= theta else theta for v in f.grades))


def meet_k(f, g, k) -> FuzzySubset:
    return truncate_k(meet(f, g), k)


def join_k(f, g, k) -> FuzzySubset:
    return truncate_k(join(f, g), k)


def product_k(f, g, k) -> FuzzySubset:
    return truncate_k(conv_product(f, g), k)


# ---------------------------------------------------------------- level sets

def level_set(f: FuzzySubset, t) -> frozenset:
    t = grade(t)
    if t <= 0:
        raise FuzzyError("level sets need t in (0,1]")
    return frozenset(x for x, v in enumerate(f.grades) if v >= t)


def support(f: FuzzySubset) -> frozenset:
    return frozenset(x for x, v in enumerate(f.grades) if v > 0)


def level_intervals(f: FuzzySubset) -> list:
    """Piecewise description of t -> f_t on (0,1] as ``(lo, hi, set)`` triples.

    Each triple means f_t equals ``set`` for every t in (lo, hi].
    """
    cuts = sorted({ZERO, ONE} | set(f.grades))
    out = []
    for lo, hi in zip(cuts, cuts[1:]):
        out.append((lo, hi, level_set(f, hi)))
    return out


# ---------------------------------------------------------------- fuzzy points

RELATIONS = ("in", "q", "qk", "in_or_q", "in_or_qk", "in_and_q", "in_and_qk")

_ALIASES = {
    "∈": "in", "in": "in",
    "q": "q",
    "q_k": "qk", "qk": "qk",
    "∈∨q": "in_or_q", "in_or_q": "in_or_q", "in-or-q": "in_or_q",
    "∈∨q_k": "in_or_qk", "in_or_qk": "in_or_qk", "in-or-qk": "in_or_qk",
    "∈∧q": "in_and_q", "in_and_q": "in_and_q", "in-and-q": "in_and_q",
    "∈∧q_k": "in_and_qk", "in_and_qk": "in_and_qk",
}


def relation_name(rel: str) -> str:
    try:
        return _ALIASES[rel]
    except KeyError:
        raise FuzzyError(f"unknown fuzzy-point relation {rel!r}") from None


def relation_holds(value: Fraction, t: Fraction, rel: str, k: Fraction = ZERO) -> bool:
    """Decide ``x_t rel f`` given ``value = f(x)``."""
    if rel == "in":
        return value >= t
    if rel == "q":
        return value + t > 1
    if rel == "qk":
        return value + t + k > 1
    if rel == "in_or_q":
        return value >= t or value + t > 1
    if rel == "in_or_qk":
        return value >= t or value + t + k > 1
    if rel == "in_and_q":
        return value >= t and value + t > 1
    if rel == "in_and_qk":
        return value >= t and value + t + k > 1
    raise FuzzyError(f"unknown fuzzy-point relation {rel!r}")


def point_relation(f: FuzzySubset, p: FuzzyPoint, rel: str, k=ZERO, negate: bool = False) -> bool:
    """Evaluate ``p rel f`` exactly; ``negate`` gives the barred relation."""
    result = relation_holds(f.grades[p.element], p.t, relation_name(rel), as_k(k).k)
    return not result if negate else result
