"""Executable theorem registry over finite AG-groupoids.

Each registry entry states a characterization as a property of a concrete
groupoid: its structural side conditions, the classes its fuzzy operands
range over, and one or more conclusion variants.  "For every fuzzy X-ideal"
is finitized to "for every grid-valued fuzzy subset passing the X filter",
which under-approximates the real quantifier; every report says so.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .fuzzy import (
    HALF,
    ONE,
    ZERO,
    FuzzySubset,
    as_k,
    characteristic,
    constant,
    conv_product,
    grade,
    join,
    join_k,
    level_set,
    meet,
    meet_k,
    support,
    truncate_k,
)
from .groupoid import (
    Groupoid,
    all_subsets,
    crisp_profile,
    enumerate_crisp,
    find_left_identity,
    is_intra_regular,
    is_regular,
    is_weakly_regular,
    subset_product,
)
from .ideals import check_classic, check_quantifier, check_threshold_k

DEFAULT_BUDGET = 10 ** 7
DEFAULT_MAX_COMBINATIONS = 250_000
UNDER_APPROXIMATION = ("population finitized to grid-valued fuzzy subsets passing the "
                       "hypothesis filter; a pass is evidence on this population only")


class BudgetExceeded(RuntimeError):
    pass


class HypothesisNotMet(ValueError):
    def __init__(self, theorem: str, conditions: dict):
        missing = ", ".join(k for k, v in conditions.items() if not v)
        super().__init__(f"{theorem}: hypothesis not met ({missing})")
        self.theorem = theorem
        self.conditions = conditions


class UnknownTheorem(KeyError):
    pass


# ---------------------------------------------------------------- grids and populations

@dataclass(frozen=True)
class GradeGrid:
    values: tuple

    def __post_init__(self):
        vals = tuple(grade(v) for v in self.values)
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise ValueError("grid values must be strictly increasing")
        if not vals or vals[0] != ZERO or vals[-1] != ONE:
            raise ValueError("grid must contain 0 and 1")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str) -> "GradeGrid":
        return cls(tuple(tok for tok in text.replace(" ", "").split(",") if tok))

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


DEFAULT_GRID = GradeGrid((0, Fraction(1, 4), HALF, Fraction(3, 4), 1))
COARSE_GRID = GradeGrid((0, HALF, 1))


def enumerate_fuzzy(G: Groupoid, grid: GradeGrid = DEFAULT_GRID,
                    budget: int = DEFAULT_BUDGET) -> Iterator[FuzzySubset]:
    """Every grid-valued fuzzy subset of G, in lexicographic order."""
    size = len(grid) ** G.order
    if size > budget:
        raise BudgetExceeded(f"{len(grid)}^{G.order} = {size} subsets exceeds budget {budget}")
    for grades in itertools.product(grid.values, repeat=G.order):
        yield FuzzySubset._trusted(G, grades)


def sample_fuzzy(G: Groupoid, grid: GradeGrid = DEFAULT_GRID, seed: int = 0,
                 count: int = 100) -> Iterator[FuzzySubset]:
    """A reproducible pseudo-random stream of grid-valued fuzzy subsets."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    for _ in range(count):
        yield FuzzySubset._trusted(G, tuple(rng.choice(grid.values) for _ in G.elements))


def hypothesis_filter(G: Groupoid, stream: Iterable[FuzzySubset], kind: str, k=ZERO) -> Iterator[FuzzySubset]:
    """Pass exactly the subsets of G that are (in, in-or-q_k)-fuzzy ``kind`` ideals."""
    kp = as_k(k)
    for f in stream:
        if f.groupoid != G:
            raise ValueError("fuzzy subset lives on a different groupoid")
        if check_threshold_k(f, kind, kp).holds:
            yield f


# ---------------------------------------------------------------- evaluation context

class Lab:
    """Per-(groupoid, k) caches shared by the conclusion checks."""

    def __init__(self, G: Groupoid, k=ZERO, base: Sequence[FuzzySubset] = ()):
        self.G = G
        self.kp = as_k(k)
        self.k = self.kp.k
        self.theta = self.kp.theta
        self.one = constant(G, ONE)
        self.base = list(base)
        self._products: dict = {}
        self._classes: dict = {}

    def prod(self, f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
        key = (f.grades, g.grades)
        out = self._products.get(key)
        if out is None:
            out = self._products[key] = conv_product(f, g)
        return out

    def prod_k(self, f, g) -> FuzzySubset:
        key = (f.grades, g.grades, "k")
        out = self._products.get(key)
        if out is None:
            out = self._products[key] = truncate_k(self.prod(f, g), self.kp)
        return out

    def trunc(self, f) -> FuzzySubset:
        return truncate_k(f, self.kp)

    def members(self, cls: str) -> list:
        if cls not in self._classes:
            self._classes[cls] = _class_members(self, cls)
        return self._classes[cls]


def _is_construct(G: Groupoid, f: FuzzySubset) -> bool:
    B = support(f)
    return bool(B) and all(v >= HALF for v in f.grades if v) and crisp_profile(G, B)["bi-ideal"]


def _class_members(lab: Lab, cls: str) -> list:
    G, base, kp = lab.G, lab.base, lab.kp
    if cls == "any":
        return base
    if cls == "one-sided":
        return [f for f in base if check_threshold_k(f, "left-ideal", kp) or check_threshold_k(f, "right-ideal", kp)]
    if cls == "construct":
        return [f for f in base if _is_construct(G, f)]
    if cls.startswith("support-"):
        alpha = cls[len("support-"):]
        return [f for f in base if any(f.grades)
                and check_quantifier(f, "bi-ideal", alpha, "in_or_qk", kp)]
    if cls == "containment-pair":
        return [(f, h) for f in base for h in base if f <= h]
    if cls == "crisp":
        return list(all_subsets(G.order))
    if cls.startswith("crisp-"):
        return enumerate_crisp(G, cls[len("crisp-"):])
    return [f for f in base if check_threshold_k(f, cls, kp)]


# ---------------------------------------------------------------- violations and reports

@dataclass(frozen=True)
class Violation:
    """Where a conclusion breaks: the two sides at ``element`` under ``relation``."""

    element: Optional[int]
    lhs: object
    rhs: object
    relation: str
    detail: str = ""


def _cmp(lhs: FuzzySubset, rhs: FuzzySubset, relation: str) -> Optional[Violation]:
    for x, (a, b) in enumerate(zip(lhs.grades, rhs.grades)):
        ok = a <= b if relation == "<=" else a >= b if relation == ">=" else a == b
        if not ok:
            return Violation(x, a, b, relation)
    return None


def _implies_ideal(f: FuzzySubset, kind: str, kp, what: str) -> Optional[Violation]:
    v = check_threshold_k(f, kind, kp)
    if v.holds:
        return None
    x = v.elements[-1] if v.clause == "quasi" else None
    return Violation(x, v.values[0], v.values[1], ">=",
                     f"{what} is not a {kind}: clause {v.clause} fails at {v.elements}")


def _iff(lhs: bool, rhs: bool, detail: str = "") -> Optional[Violation]:
    return None if lhs == rhs else Violation(None, lhs, rhs, "<=>", detail)


def _describe(G: Groupoid, op) -> object:
    if isinstance(op, FuzzySubset):
        return {G.label(i): str(g) for i, g in enumerate(op.grades)}
    if isinstance(op, (frozenset, set)):
        return G.labels(op)
    if isinstance(op, tuple):
        return [_describe(G, o) for o in op]
    return op


def _show(v) -> object:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, frozenset):
        return sorted(v)
    if isinstance(v, (tuple, list)):
        return [_show(x) for x in v]
    return v


@dataclass(frozen=True)
class CounterexampleReport:
    theorem: str
    variant: str
    groupoid: Groupoid
    operands: tuple
    k: Fraction
    violation: Violation

    def replay(self) -> Optional[Violation]:
        """Re-evaluate the stored operands; equal to ``violation`` when reproducible."""
        lab = Lab(self.groupoid, self.k)
        return find_variant(self.theorem, self.variant).check(lab, self.operands)

    def reproduces(self) -> bool:
        return self.replay() == self.violation

    def as_dict(self) -> dict:
        G = self.groupoid
        v = self.violation
        return {
            "theorem": self.theorem,
            "variant": self.variant,
            "groupoid": {"table": [list(r) for r in G.table], "names": list(G.names)},
            "operands": [_describe(G, op) for op in self.operands],
            "k": str(self.k),
            "element": None if v.element is None else G.label(v.element),
            "lhs": _show(v.lhs),
            "rhs": _show(v.rhs),
            "relation": v.relation,
            "detail": v.detail,
        }


@dataclass(frozen=True)
class Variant:
    name: str
    classes: tuple
    check: Callable
    pinned: bool = True
    note: str = ""


@dataclass(frozen=True)
class Theorem:
    id: str
    citation: str
    variants: tuple
    side: tuple = ()          # structural hypotheses of the whole theorem
    property: tuple = ()      # the structural condition (i) the fuzzy conditions characterize
    equivalence: bool = False  # crisp equivalences are checked whether or not (i) holds


@dataclass
class VariantResult:
    name: str
    pinned: bool
    holds: bool
    checked: int
    population: tuple
    truncated: bool
    counterexample: Optional[CounterexampleReport] = None
    note: str = ""

    def as_dict(self) -> dict:
        d = {"variant": self.name, "pinned": self.pinned, "holds": self.holds,
             "checked": self.checked, "population": list(self.population),
             "truncated": self.truncated}
        if self.note:
            d["note"] = self.note
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.as_dict()
        return d


@dataclass
class TheoremReport:
    theorem: str
    citation: str
    groupoid: Groupoid
    k: Fraction
    grid: GradeGrid
    mode: str
    conditions: dict
    variants: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        """True when every pinned conclusion variant holds."""
        return all(v.holds for v in self.variants if v.pinned)

    def variant(self, name: str) -> VariantResult:
        return next(v for v in self.variants if v.name == name)

    def counterexamples(self) -> list:
        return [v.counterexample for v in self.variants if v.counterexample is not None]

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "citation": self.citation,
            "groupoid": self.groupoid.name or list(self.groupoid.flat()),
            "k": str(self.k),
            "grid": str(self.grid),
            "mode": self.mode,
            "side_conditions": dict(self.conditions),
            "holds": self.holds,
            "variants": [v.as_dict() for v in self.variants],
            "note": UNDER_APPROXIMATION,
        }


# ---------------------------------------------------------------- conclusion checks

def _level_sets_bi(lab: Lab, ops) -> Optional[Violation]:
    (f,) = ops
    fuzzy_bi = check_classic(f, "bi-ideal").holds
    bad = None
    for t in sorted(set(f.grades) - {ZERO}):
        A = level_set(f, t)
        if A and not crisp_profile(lab.G, A)["bi-ideal"]:
            bad = t
            break
    return _iff(fuzzy_bi, bad is None, "" if bad is None else f"level set at t={bad} is not a bi-ideal")


def _classic_vs_inin(lab, ops):
    (f,) = ops
    return _iff(check_classic(f, "bi-ideal").holds,
                check_quantifier(f, "bi-ideal", "in", "in").holds)


def _support_bi(lab, ops):
    (f,) = ops
    B = support(f)
    if crisp_profile(lab.G, B)["bi-ideal"]:
        return None
    return Violation(None, sorted(B), "bi-ideal", "is", "support is not a bi-ideal")


def _quantified_bi(alpha):
    def check(lab, ops):
        (f,) = ops
        v = check_quantifier(f, "bi-ideal", alpha, "in_or_qk", lab.kp)
        if v.holds:
            return None
        return Violation(v.elements[0], v.elements, v.values, "quantifier",
                         f"({alpha}, in-or-q_k) clause {v.clause} fails")
    return check


def _monotone(lab, ops):
    (f, h), (g, m) = ops
    return _cmp(lab.prod_k(f, g), lab.prod_k(h, m), "<=")


def _meet_is_bi(lab, ops):
    f, g = ops
    return _implies_ideal(meet_k(f, g, lab.kp), "bi-ideal", lab.kp, "f meet_k g")


def _is(kind, what="f"):
    def check(lab, ops):
        return _implies_ideal(ops[0], kind, lab.kp, what)
    return check


def _idem_sub(lab, ops):
    (f,) = ops
    return _cmp(lab.prod_k(f, f), f, "<=")


def _sandwich(lab, f):
    return lab.prod_k(lab.prod_k(f, lab.one), f)


def _sandwich_sub(lab, ops):
    (f,) = ops
    return _cmp(_sandwich(lab, f), f, "<=")


def _sandwich_eq(truncated):
    def check(lab, ops):
        (f,) = ops
        return _cmp(_sandwich(lab, f), lab.trunc(f) if truncated else f, "==")
    return check


def _product_is_bi(lab, ops):
    f, g = ops
    return _implies_ideal(lab.prod_k(f, g), "bi-ideal", lab.kp, "f o_k g")


def _idem_eq(truncated):
    def check(lab, ops):
        (f,) = ops
        return _cmp(lab.prod_k(f, f), lab.trunc(f) if truncated else f, "==")
    return check


def _meet_eq_products(lab, ops):
    f, g = ops
    rhs = meet_k(lab.prod_k(f, g), lab.prod_k(g, f), lab.kp)
    return _cmp(meet_k(f, g, lab.kp), rhs, "==")


def _dual_forms(kind):
    def check(lab, ops):
        (f,) = ops
        return _iff(check_quantifier(f, kind, "in", "in_or_qk", lab.kp).holds,
                    check_threshold_k(f, kind, lab.kp).holds, kind)
    return check


def _plain_product_two_sided(lab, ops):
    f, g = ops
    return _implies_ideal(lab.prod(f, g), "two-sided-ideal", lab.kp, "f o g")


def _combinator(which):
    def check(lab, ops):
        f, g = ops
        kp = lab.kp
        if which == "meet":
            return _cmp(meet_k(f, g, kp), meet(lab.trunc(f), lab.trunc(g)), "==")
        if which == "join":
            return _cmp(join_k(f, g, kp), join(lab.trunc(f), lab.trunc(g)), "==")
        return _cmp(lab.prod_k(f, g), conv_product(lab.trunc(f), lab.trunc(g)), "==")
    return check


def _char(which, truncated):
    def check(lab, ops):
        A, B = ops
        G = lab.G
        CA, CB = characteristic(G, A), characteristic(G, B)
        if which == "meet":
            lhs, target = meet_k(CA, CB, lab.kp), A & B
        elif which == "join":
            lhs, target = join_k(CA, CB, lab.kp), A | B
        else:
            lhs, target = lab.prod_k(CA, CB), subset_product(G, A, B)
        rhs = characteristic(G, target)
        return _cmp(lhs, lab.trunc(rhs) if truncated else rhs, "==")
    return check


def _char_ideal_iff(kind):
    def check(lab, ops):
        (L,) = ops
        crisp = crisp_profile(lab.G, L)[kind]
        fuzzy = check_threshold_k(lab.trunc(characteristic(lab.G, L)), kind, lab.kp).holds
        return _iff(crisp, fuzzy, f"{kind} of {sorted(L)}")
    return check


def _truncation_classic(kind):
    def check(lab, ops):
        (f,) = ops
        v = check_classic(lab.trunc(f), kind)
        if v.holds:
            return None
        return Violation(None, v.values[0], v.values[1], ">=",
                         f"f_k is not a fuzzy {kind}: clause {v.clause} at {v.elements}")
    return check


def _meet_le_product(lab, ops):
    f, g = ops
    return _cmp(meet_k(f, g, lab.kp), lab.prod_k(f, g), "<=")


def _meet_eq_product(lab, ops):
    f, g = ops
    return _cmp(meet_k(f, g, lab.kp), lab.prod_k(f, g), "==")


def _triple_le(lab, ops):
    f, g, h = ops
    lhs = meet_k(meet_k(f, g, lab.kp), h, lab.kp)
    return _cmp(lhs, lab.prod_k(lab.prod_k(f, g), h), "<=")


def _sandwich_eq_trunc(lab, ops):
    (f,) = ops
    return _cmp(lab.trunc(f), _sandwich(lab, f), "==")


def _meet_eq_fgf(lab, ops):
    f, g = ops
    return _cmp(meet_k(f, g, lab.kp), lab.prod_k(lab.prod_k(f, g), f), "==")


def _both_products_ge(lab, ops):
    f, g = ops
    lhs = meet(lab.prod_k(f, g), lab.prod_k(g, f))
    return _cmp(lhs, meet_k(f, g, lab.kp), ">=")


def _product_ge_meet(lab, ops):
    f, g = ops
    return _cmp(lab.prod_k(f, g), meet_k(f, g, lab.kp), ">=")


# crisp characterizations: whole-groupoid checks with no fuzzy operands

def _pairs_condition(lab, order):
    G = lab.G
    for R in enumerate_crisp(G, "right-ideal"):
        for L in enumerate_crisp(G, "left-ideal"):
            prod = subset_product(G, R, L) if order == "RL" else subset_product(G, L, R)
            if R & L != prod:
                return (R, L)
    return None


def _crisp_th1_ii(lab, ops):
    bad = _pairs_condition(lab, "RL")
    return _iff(is_regular(lab.G), bad is None,
                "" if bad is None else f"R={sorted(bad[0])}, L={sorted(bad[1])}: R&L != RL")


def _quasi_condition(lab, predicate):
    for A in enumerate_crisp(lab.G, "quasi-ideal"):
        if not predicate(A):
            return A
    return None


def _crisp_th1_iii(bracket):
    def check(lab, ops):
        G = lab.G
        S = frozenset(G.elements)
        if bracket == "(AS)A":
            pred = lambda A: subset_product(G, subset_product(G, A, S), A) == A
        else:
            pred = lambda A: subset_product(G, A, subset_product(G, S, A)) == A
        bad = _quasi_condition(lab, pred)
        return _iff(is_regular(G), bad is None,
                    "" if bad is None else f"A={sorted(bad)}: {bracket} != A")
    return check


def _crisp_th2(lab, ops):
    bad = _pairs_condition(lab, "LR")
    return _iff(is_intra_regular(lab.G), bad is None,
                "" if bad is None else f"R={sorted(bad[0])}, L={sorted(bad[1])}: R&L != LR")


def _crisp_th3(lab, ops):
    G = lab.G
    bad = _quasi_condition(lab, lambda A: subset_product(G, A, A) == A)
    return _iff(is_regular(G) and is_intra_regular(G), bad is None,
                "" if bad is None else f"A={sorted(bad)}: AA != A")


# ---------------------------------------------------------------- registry

_FINAL_CONDITIONS = (
    ("(ii)", ("right-ideal", "left-ideal")),
    ("(iii)", ("right-ideal", "quasi-ideal")),
    ("(iv)", ("right-ideal", "bi-ideal")),
    ("(v)", ("right-ideal", "generalized-bi-ideal")),
    ("(vi)", ("left-ideal", "quasi-ideal")),
    ("(vii)", ("left-ideal", "bi-ideal")),
    ("(viii)", ("left-ideal", "generalized-bi-ideal")),
    ("(ix)", ("quasi-ideal", "quasi-ideal")),
    ("(x)", ("quasi-ideal", "bi-ideal")),
    ("(xi)", ("quasi-ideal", "generalized-bi-ideal")),
    ("(xii)", ("bi-ideal", "bi-ideal")),
    ("(xiii)", ("bi-ideal", "generalized-bi-ideal")),
    ("(ixv)", ("generalized-bi-ideal", "generalized-bi-ideal")),
)

LI, WR, REG, INTRA = "left-identity", "weakly-regular", "regular", "intra-regular"
NO_OPERANDS = ("none",)


def V(name, classes, check, pinned=True, note=""):
    return Variant(name, tuple(classes), check, pinned, note)


_RECORDS = [
    Theorem("T2.1-level", "f is a fuzzy bi-ideal <=> every nonempty level set f_t, t in (0,1], is a bi-ideal",
            (V("equivalence", ["any"], _level_sets_bi),)),
    Theorem("T3.1-inin", "f is a fuzzy bi-ideal <=> f is an (in,in)-fuzzy bi-ideal",
            (V("equivalence", ["any"], _classic_vs_inin),)),
    Theorem("S3-support", "a nonzero (alpha,in-or-q)-fuzzy bi-ideal f has a bi-ideal support {x : f(x) > 0}",
            (V("alpha=in", ["support-in"], _support_bi),
             V("alpha=q", ["support-q"], _support_bi, pinned=False, note="coverage of alpha=q is unclear; reported only"),
             V("alpha=in-or-q", ["support-in_or_q"], _support_bi, pinned=False,
               note="reported only"))),
    Theorem("S3-construct", "f = 0 off a bi-ideal B and f >= 0.5 on B => f is a (q,in-or-q)- and (in,in-or-q)-fuzzy bi-ideal",
            (V("(q,in-or-q)", ["construct"], _quantified_bi("q")),
             V("(in,in-or-q)", ["construct"], _quantified_bi("in")))),
    Theorem("P4.2-mono", "f <= h and g <= m => f o_k g <= h o_k m",
            (V("monotone", ["containment-pair", "containment-pair"], _monotone),)),
    Theorem("P4.3-meet", "f, g (in,in-or-q_k)-fuzzy bi-ideals => f meet_k g is one",
            (V("closure", ["bi-ideal", "bi-ideal"], _meet_is_bi),)),
    Theorem("L4.2-onesided", "every one-sided (in,in-or-q_k)-fuzzy ideal is an (in,in-or-q_k)-fuzzy bi-ideal",
            (V("one-sided=>bi", ["one-sided"], _is("bi-ideal")),)),
    Theorem("P4.4-idem-sub", "f bi-ideal => f o_k f <= f",
            (V("inclusion", ["bi-ideal"], _idem_sub),)),
    Theorem("P4.5-sandwich-sub", "f bi-ideal => (f o_k 1) o_k f <= f",
            (V("inclusion", ["bi-ideal"], _sandwich_sub),)),
    Theorem("T4.3-sandwich-eq", "regular with left identity: (f o_k 1) o_k f = f for every bi-ideal f",
            (V("truncated", ["bi-ideal"], _sandwich_eq(True), note="right side read as f_k"),
             V("literal", ["bi-ideal"], _sandwich_eq(False), pinned=False,
               note="as printed; refuted by grades above theta")),
            side=(LI,), property=(REG,)),
    Theorem("L4.4-prod-bi", "regular with left identity: f, g bi-ideals => f o_k g is a bi-ideal",
            (V("closure", ["bi-ideal", "bi-ideal"], _product_is_bi),),
            side=(LI,), property=(REG,)),
    Theorem("T4.4-i-idem-eq", "regular, intra-regular, left identity: f o_k f = f for every bi-ideal f",
            (V("truncated", ["bi-ideal"], _idem_eq(True), note="right side read as f_k"),
             V("literal", ["bi-ideal"], _idem_eq(False), pinned=False,
               note="as printed; fails at f = constant 1")),
            side=(LI,), property=(REG, INTRA)),
    Theorem("T4.4-ii-meet-eq", "regular, intra-regular, left identity: f meet_k g = (f o_k g) meet_k (g o_k f) for bi-ideals f, g",
            (V("equality", ["bi-ideal", "bi-ideal"], _meet_eq_products),),
            side=(LI,), property=(REG, INTRA)),
    Theorem("TH5-subgroupoid", "(in,in-or-q_k)-fuzzy subgroupoid <=> f(xy) >= min(f(x), f(y), (1-k)/2)",
            (V("equivalence", ["any"], _dual_forms("subgroupoid")),)),
    Theorem("TH-LR-k", "(in,in-or-q_k)-fuzzy left (right) ideal <=> f(xy) >= min(f(y), (1-k)/2) (resp. f(x))",
            (V("left", ["any"], _dual_forms("left-ideal")),
             V("right", ["any"], _dual_forms("right-ideal")))),
    Theorem("TH10-prod-ideal", "weakly regular with left identity: f left, g right => f o g is a two-sided (in,in-or-q_k)-ideal",
            (V("two-sided", ["left-ideal", "right-ideal"], _plain_product_two_sided),),
            side=(LI, WR)),
    Theorem("LEM-genbi-bi", "weakly regular with left identity: generalized bi-ideal => bi-ideal",
            (V("genbi=>bi", ["generalized-bi-ideal"], _is("bi-ideal")),), side=(LI, WR)),
    Theorem("LEM-quasi-bi", "weakly regular with left identity: quasi-ideal => bi-ideal",
            (V("quasi=>bi", ["quasi-ideal"], _is("bi-ideal")),), side=(LI, WR)),
    Theorem("LEM-ideal-interior", "every (in,in-or-q_k)-fuzzy ideal is an (in,in-or-q_k)-fuzzy interior ideal",
            (V("ideal=>interior", ["two-sided-ideal"], _is("interior-ideal")),)),
    Theorem("LEM-k-combinators", "f meet_k g = f_k meet g_k, f join_k g = f_k join g_k, f o_k g = f_k o g_k",
            (V("meet", ["any", "any"], _combinator("meet")),
             V("join", ["any", "any"], _combinator("join")),
             V("product", ["any", "any"], _combinator("product")))),
    Theorem("LEM-char-k", "characteristic functions: C_A meet_k C_B = (C_{A&B})_k, join and product alike; "
            "L left/right/quasi <=> (C_L)_k is one; f k-left/right ideal => f_k fuzzy left/right ideal",
            (V("meet", ["crisp", "crisp"], _char("meet", True), note="right side read with _k"),
             V("join", ["crisp", "crisp"], _char("join", True), note="right side read with _k"),
             V("product", ["crisp", "crisp"], _char("product", True), note="right side read with _k"),
             V("meet-literal", ["crisp", "crisp"], _char("meet", False), pinned=False),
             V("join-literal", ["crisp", "crisp"], _char("join", False), pinned=False),
             V("product-literal", ["crisp", "crisp"], _char("product", False), pinned=False),
             V("left-iff", ["crisp"], _char_ideal_iff("left-ideal")),
             V("right-iff", ["crisp"], _char_ideal_iff("right-ideal")),
             V("quasi-iff", ["crisp"], _char_ideal_iff("quasi-ideal")),
             V("left-truncation", ["left-ideal"], _truncation_classic("left-ideal")),
             V("right-truncation", ["right-ideal"], _truncation_classic("right-ideal")))),
    Theorem("TH22", "weakly regular with left identity: regular <=> f meet_k g = f o_k g for right f, left g",
            (V("(ii)", ["right-ideal", "left-ideal"], _meet_eq_product),),
            side=(LI, WR), property=(REG,)),
    Theorem("TH23", "weakly regular with left identity: regular <=> (f meet_k g) meet_k h <= (f o_k g) o_k h "
            "for right f, left h and g generalized bi / bi / quasi",
            (V("(ii)", ["right-ideal", "generalized-bi-ideal", "left-ideal"], _triple_le),
             V("(iii)", ["right-ideal", "bi-ideal", "left-ideal"], _triple_le),
             V("(iv)", ["right-ideal", "quasi-ideal", "left-ideal"], _triple_le)),
            side=(LI, WR), property=(REG,)),
    Theorem("TH24", "weakly regular with left identity: regular <=> f_k = (f o_k 1) o_k f for generalized bi / bi / quasi f",
            (V("(ii)", ["generalized-bi-ideal"], _sandwich_eq_trunc),
             V("(iii)", ["bi-ideal"], _sandwich_eq_trunc),
             V("(iv)", ["quasi-ideal"], _sandwich_eq_trunc)),
            side=(LI, WR), property=(REG,)),
    Theorem("TH25", "weakly regular with left identity: regular <=> f meet_k g = (f o_k g) o_k f",
            (V("(ii)", ["quasi-ideal", "two-sided-ideal"], _meet_eq_fgf),
             V("(iii)", ["quasi-ideal", "interior-ideal"], _meet_eq_fgf),
             V("(v)", ["quasi-ideal", "interior-ideal"], _meet_eq_fgf, note="printed identically to (iii)"),
             V("(iv)", ["bi-ideal", "two-sided-ideal"], _meet_eq_fgf),
             V("(vi)", ["generalized-bi-ideal", "two-sided-ideal"], _meet_eq_fgf),
             V("(vii)", ["generalized-bi-ideal", "interior-ideal"], _meet_eq_fgf)),
            side=(LI, WR), property=(REG,)),
    Theorem("TH26", "weakly regular with left identity: regular <=> f meet_k g <= f o_k g for left g and quasi / bi / generalized bi f",
            (V("(ii)", ["quasi-ideal", "left-ideal"], _meet_le_product),
             V("(iii)", ["bi-ideal", "left-ideal"], _meet_le_product),
             V("(iv)", ["generalized-bi-ideal", "left-ideal"], _meet_le_product)),
            side=(LI, WR), property=(REG,)),
    Theorem("TH27", "weakly regular with left identity: intra-regular <=> f meet_k g <= f o_k g for left f, right g",
            (V("(ii)", ["left-ideal", "right-ideal"], _meet_le_product),),
            side=(LI, WR), property=(INTRA,)),
    Theorem("TH28", "weakly regular with left identity: regular and intra-regular <=> f o_k f = f_k for quasi / bi f, "
            "and f o_k g >= f meet_k g for quasi / bi pairs",
            (V("(ii)", ["quasi-ideal"], _idem_eq(True)),
             V("(iii)", ["bi-ideal"], _idem_eq(True)),
             V("(iv)", ["quasi-ideal", "quasi-ideal"], _product_ge_meet),
             V("(v)", ["quasi-ideal", "bi-ideal"], _product_ge_meet),
             V("(vi)", ["bi-ideal", "bi-ideal"], _product_ge_meet)),
            side=(LI, WR), property=(REG, INTRA)),
    Theorem("TH-final", "weakly regular with left identity: regular and intra-regular <=> "
            "(f o_k g) meet (g o_k f) >= f meet_k g",
            tuple(V(name, classes, _both_products_ge) for name, classes in _FINAL_CONDITIONS),
            side=(LI, WR), property=(REG, INTRA)),
    Theorem("CRISP-th1", "weakly regular with left identity: regular <=> R&L = RL for right R, left L "
            "<=> (AS)A = A for quasi-ideals A",
            (V("(i)<=>(ii)", NO_OPERANDS, _crisp_th1_ii),
             V("(i)<=>(iii) (AS)A", NO_OPERANDS, _crisp_th1_iii("(AS)A")),
             V("(i)<=>(iii) A(SA)", NO_OPERANDS, _crisp_th1_iii("A(SA)"), pinned=False,
               note="alternative bracketing, reported only")),
            side=(LI, WR), property=(REG,), equivalence=True),
    Theorem("CRISP-th2", "weakly regular with left identity: intra-regular <=> R&L = LR for right R, left L",
            (V("(i)<=>(ii)", NO_OPERANDS, _crisp_th2),),
            side=(LI, WR), property=(INTRA,), equivalence=True),
    Theorem("CRISP-th3", "weakly regular with left identity: regular and intra-regular <=> every quasi-ideal is idempotent",
            (V("(i)<=>(ii)", NO_OPERANDS, _crisp_th3),),
            side=(LI, WR), property=(REG, INTRA), equivalence=True),
]

REGISTRY = {t.id: t for t in _RECORDS}
THEOREM_IDS = tuple(REGISTRY)


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None


def find_variant(theorem_id: str, name: str) -> Variant:
    return next(v for v in get_theorem(theorem_id).variants if v.name == name)


_STRUCTURAL = {
    LI: lambda G: find_left_identity(G) is not None,
    WR: is_weakly_regular,
    REG: is_regular,
    INTRA: is_intra_regular,
}


def structural_conditions(G: Groupoid, names: Iterable[str]) -> dict:
    return {name: bool(_STRUCTURAL[name](G)) for name in names}


def side_conditions_met(G: Groupoid, theorem_id: str) -> bool:
    th = get_theorem(theorem_id)
    needed = th.side if th.equivalence else th.side + th.property
    return all(structural_conditions(G, needed).values())


# ---------------------------------------------------------------- driver

def _operand_tuples(lab: Lab, classes: tuple, cap: int):
    if classes == NO_OPERANDS:
        return [()], (1,), False
    pools = [lab.members(c) for c in classes]
    sizes = tuple(len(p) for p in pools)
    total = 1
    for s in sizes:
        total *= s
    it = itertools.product(*pools)
    if total > cap:
        return itertools.islice(it, cap), sizes, True
    return it, sizes, False


def _run_variant(th: Theorem, var: Variant, lab: Lab, cap: int) -> VariantResult:
    ops_iter, sizes, truncated = _operand_tuples(lab, var.classes, cap)
    checked = 0
    for ops in ops_iter:
        checked += 1
        bad = var.check(lab, ops)
        if bad is not None:
            cx = CounterexampleReport(th.id, var.name, lab.G, ops, lab.k, bad)
            return VariantResult(var.name, var.pinned, False, checked, sizes, truncated, cx, var.note)
    return VariantResult(var.name, var.pinned, True, checked, sizes, truncated, None, var.note)


def _base_population(G, grid, mode, seed, count, budget) -> list:
    if mode == "exhaustive":
        return list(enumerate_fuzzy(G, grid, budget))
    if mode == "sample":
        return list(sample_fuzzy(G, grid, seed, count))
    raise ValueError(f"unknown mode {mode!r}")


def verify_theorem(G: Groupoid, theorem_id: str, grid: GradeGrid = COARSE_GRID, k=ZERO,
                   mode: str = "exhaustive", seed: int = 0, count: int = 500,
                   budget: int = DEFAULT_BUDGET, max_combinations: int = DEFAULT_MAX_COMBINATIONS,
                   variants: Optional[Sequence[str]] = None) -> TheoremReport:
    """Check the forward direction of a registry theorem on G.

    Raises HypothesisNotMet when G lacks the theorem's side conditions (or,
    for the fuzzy characterizations, the structural property they follow from).
    """
    th = get_theorem(theorem_id)
    needed = th.side if th.equivalence else th.side + th.property
    conditions = structural_conditions(G, dict.fromkeys(th.side + th.property))
    if not all(conditions[c] for c in needed):
        raise HypothesisNotMet(th.id, {c: conditions[c] for c in needed})
    kp = as_k(k)
    uses_fuzzy = any(c not in ("none", "crisp") and not c.startswith("crisp-")
                     for v in th.variants for c in v.classes)
    base = _base_population(G, grid, mode, seed, count, budget) if uses_fuzzy else []
    lab = Lab(G, kp, base)
    report = TheoremReport(th.id, th.citation, G, kp.k, grid,
                           mode if mode == "exhaustive" else f"sample(seed={seed},count={count})",
                           conditions)
    for var in th.variants:
        if variants is not None and var.name not in variants:
            continue
        report.variants.append(_run_variant(th, var, lab, max_combinations))
    return report


# ---------------------------------------------------------------- counterexample search

@dataclass
class SearchResult:
    theorem: str
    scanned: int
    counterexample: Optional[CounterexampleReport] = None
    note: str = ""

    @property
    def exhausted(self) -> bool:
        return self.counterexample is None

    def as_dict(self) -> dict:
        d = {"theorem": self.theorem, "scanned_groupoids": self.scanned, "exhausted": self.exhausted,
             "note": self.note or UNDER_APPROXIMATION}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.as_dict()
        return d


SPECIAL_SEARCHES = ("T3.1-converse", "classic-vs-k-gap")


def _gap_check(kind):
    def check(lab, ops):
        (f,) = ops
        if not check_threshold_k(f, kind, lab.kp).holds:
            return None
        v = check_classic(f, kind)
        if v.holds:
            return None
        return Violation(None, v.values[0], v.values[1], ">=",
                         f"(in,in-or-q_k) {kind} but not a fuzzy {kind}: clause {v.clause} at {v.elements}")
    return check


def _t31_converse(lab, ops):
    (f,) = ops
    if check_classic(f, "bi-ideal").holds:
        return None
    q = check_quantifier(f, "bi-ideal", "in", "in")
    if q.holds:
        return Violation(None, False, True, "<=>", "classic fails but (in,in) holds")
    return Violation(q.elements[0], q.elements, q.values, "quantifier",
                     f"(in,in) clause {q.clause} fails")


_SPECIAL = {
    "T3.1-converse": Theorem("T3.1-converse", "a non-bi-ideal fuzzy subset fails the (in,in) quantifier form",
                             (V("witness", ["any"], _t31_converse),)),
    "classic-vs-k-gap": Theorem("classic-vs-k-gap", "an (in,in-or-q_k)-fuzzy left ideal that is not a fuzzy left ideal",
                                (V("witness", ["any"], _gap_check("left-ideal")),)),
}
REGISTRY.update(_SPECIAL)


def search_counterexample(theorem_id: str, groupoids: Iterable[Groupoid], grid: GradeGrid = COARSE_GRID,
                          k=ZERO, budget: int = DEFAULT_BUDGET,
                          max_combinations: int = DEFAULT_MAX_COMBINATIONS) -> SearchResult:
    """Look for a violated conclusion on groupoids lacking the characterized property.

    For a registry theorem "under side conditions, (i) <=> fuzzy identity",
    the slice is restricted to groupoids meeting the side conditions but
    failing (i); a violation found there exhibits the converse direction on
    a finite instance.  The two special ids search for witnesses instead.
    """
    th = get_theorem(theorem_id)
    kp = as_k(k)
    scanned = 0
    for G in groupoids:
        if theorem_id not in _SPECIAL:
            conds = structural_conditions(G, th.side + th.property)
            if not all(conds[c] for c in th.side) or all(conds[c] for c in th.property):
                continue
        scanned += 1
        lab = Lab(G, kp, list(enumerate_fuzzy(G, grid, budget)))
        for var in th.variants:
            if not var.pinned:
                continue
            res = _run_variant(th, var, lab, max_combinations)
            if res.counterexample is not None:
                return SearchResult(th.id, scanned, res.counterexample)
    note = "slice empty" if scanned == 0 else "exhausted without a counterexample"
    return SearchResult(th.id, scanned, None, note)
