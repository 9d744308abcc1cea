"""Fuzzy ideal predicates in inequality form and in fuzzy-point quantifier form.

The inequality form caps every right-hand side at theta = (1-k)/2 (or at 1
for the classic, unthresholded notions).  The quantifier form decides
implications such as ``x_t a f and y_r a f => (xy)_{t^r} b f`` over all
t, r in (0,1] by evaluating them on a finite set of critical thresholds:
every relation involved is a step function of t whose only jumps sit at
f(x), 1 - f(x) or 1 - k - f(x), so one representative per breakpoint and
per open gap between breakpoints decides the quantifier exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .fuzzy import (
    ONE,
    ZERO,
    FuzzySubset,
    as_k,
    constant,
    conv_product,
    meet,
    relation_holds,
    relation_name,
)

KINDS = (
    "subgroupoid",
    "left-ideal",
    "right-ideal",
    "two-sided-ideal",
    "bi-ideal",
    "generalized-bi-ideal",
    "quasi-ideal",
    "interior-ideal",
)

# each kind is a conjunction of clauses
CLAUSES = {
    "subgroupoid": ("subgroupoid",),
    "left-ideal": ("left",),
    "right-ideal": ("right",),
    "two-sided-ideal": ("left", "right"),
    "bi-ideal": ("subgroupoid", "generalized-bi"),
    "generalized-bi-ideal": ("generalized-bi",),
    "quasi-ideal": ("quasi",),
    "interior-ideal": ("subgroupoid", "interior"),
}

ALPHAS = ("in", "q", "in_or_q")
BETAS = ("in", "q", "in_or_q", "in_and_q", "qk", "in_or_qk", "in_and_qk")


class IdealError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of an ideal predicate.

    On failure ``elements`` names the offending elements (x, y[, z]) of the
    failing ``clause``.  For the inequality forms ``values`` holds
    (left side, required lower bound); for the quantifier form it holds the
    thresholds (t,) or (t, r).
    """

    holds: bool
    kind: str
    form: str
    clause: Optional[str] = None
    elements: Optional[tuple] = None
    values: Optional[tuple] = None
    params: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        d = {"holds": self.holds, "kind": self.kind, "form": self.form}
        if not self.holds:
            d["clause"] = self.clause
            d["elements"] = list(self.elements)
            d["values"] = [str(v) for v in self.values]
        d.update({k: str(v) for k, v in self.params.items()})
        return d


def _check_kind(kind: str) -> tuple:
    try:
        return CLAUSES[kind]
    except KeyError:
        raise IdealError(f"unknown ideal kind {kind!r}") from None


def quasi_hull(f: FuzzySubset) -> FuzzySubset:
    """(f o 1) meet (1 o f), the bound used by the quasi-ideal condition."""
    one = constant(f.groupoid, ONE)
    return meet(conv_product(f, one), conv_product(one, f))


# ---------------------------------------------------------------- inequality form

def _first(mask: np.ndarray) -> Optional[tuple]:
    hit = np.argwhere(mask)
    return tuple(int(v) for v in hit[0]) if len(hit) else None


def check_inequality(f: FuzzySubset, kind: str, cap: Fraction) -> Verdict:
    """Inequality-form check with every bound capped at ``cap``."""
    clauses = _check_kind(kind)
    G = f.groupoid
    extra = quasi_hull(f).grades if "quasi" in clauses else ()
    # min and >= only depend on order, so integer ranks are an exact encoding
    values = sorted(set(f.grades) | set(extra) | {cap})
    rank = {v: i for i, v in enumerate(values)}
    F = np.array([rank[v] for v in f.grades], dtype=np.int64)
    c = rank[cap]
    T, W = G.array, G.cube
    for clause in clauses:
        if clause == "subgroupoid":
            lhs = F[T]
            rhs = np.minimum(np.minimum(F[:, None], F[None, :]), c)
        elif clause == "left":
            lhs = F[T]
            rhs = np.broadcast_to(np.minimum(F[None, :], c), lhs.shape)
        elif clause == "right":
            lhs = F[T]
            rhs = np.broadcast_to(np.minimum(F[:, None], c), lhs.shape)
        elif clause == "generalized-bi":
            lhs = F[W]
            rhs = np.broadcast_to(np.minimum(np.minimum(F[:, None, None], F[None, None, :]), c), lhs.shape)
        elif clause == "interior":
            lhs = F[W]
            rhs = np.broadcast_to(np.minimum(F[None, :, None], c), lhs.shape)
        else:  # quasi
            H = np.array([rank[v] for v in extra], dtype=np.int64)
            lhs = F
            rhs = np.minimum(H, c)
        bad = _first(lhs < rhs)
        if bad is not None:
            return Verdict(False, kind, "", clause, bad, (values[lhs[bad]], values[rhs[bad]]))
    return Verdict(True, kind, "")


def check_classic(f: FuzzySubset, kind: str) -> Verdict:
    """Unthresholded fuzzy ideal conditions, e.g. f(xy) >= f(x) ^ f(y)."""
    v = check_inequality(f, kind, ONE)
    return _with_form(v, "classic", {})


def check_threshold_k(f: FuzzySubset, kind: str, k=ZERO) -> Verdict:
    """(in, in-or-q_k) conditions in inequality form, bounds capped at (1-k)/2."""
    kp = as_k(k)
    v = check_inequality(f, kind, kp.theta)
    return _with_form(v, "inequality", {"k": kp.k})


def _with_form(v: Verdict, form: str, params: dict) -> Verdict:
    return Verdict(v.holds, v.kind, form, v.clause, v.elements, v.values, params)


# ---------------------------------------------------------------- quantifier form

def critical_thresholds(values, k: Fraction = ZERO) -> tuple:
    """Breakpoints of every relation on grades ``values`` plus one point per gap."""
    theta = (1 - k) / 2
    cuts = {theta, ONE}
    for v in values:
        cuts.update((v, 1 - v, 1 - k - v))
    cuts = sorted(c for c in cuts if ZERO < c <= ONE)
    pts, prev = [], ZERO
    for c in cuts:
        pts.append((prev + c) / 2)
        pts.append(c)
        prev = c
    return tuple(pts)


def _relation_matrix(grades, ts, rel: str, k: Fraction) -> np.ndarray:
    return np.array([[relation_holds(v, t, rel, k) for t in ts] for v in grades], dtype=bool)


def _any_at_or_above(A: np.ndarray) -> np.ndarray:
    return np.flip(np.logical_or.accumulate(np.flip(A, axis=-1), axis=-1), axis=-1)


def check_quantifier(f: FuzzySubset, kind: str, alpha="∈", beta="∈∨q_k", k=ZERO) -> Verdict:
    """Decide the (alpha, beta)-fuzzy ``kind`` condition by finitized quantification."""
    clauses = _check_kind(kind)
    alpha, beta = relation_name(alpha), relation_name(beta)
    if alpha in ("in_and_q", "in_and_qk"):
        raise IdealError("alpha = in-and-q is not allowed")
    if alpha not in ALPHAS:
        raise IdealError(f"unsupported alpha {alpha!r}")
    if beta not in BETAS:
        raise IdealError(f"unsupported beta {beta!r}")
    kp = as_k(k)
    kk = kp.k
    G = f.groupoid
    hull = quasi_hull(f) if "quasi" in clauses else None
    ts = critical_thresholds(set(f.grades) | set(hull.grades if hull else ()), kk)
    A = _relation_matrix(f.grades, ts, alpha, kk)
    B = _relation_matrix(f.grades, ts, beta, kk)
    notB = ~B
    T, W = G.array, G.cube
    params = {"alpha": alpha, "beta": beta, "k": kk}
    geA = _any_at_or_above(A)
    for clause in clauses:
        if clause in ("subgroupoid", "generalized-bi"):
            # s = t ^ r is attainable at index s iff one of t, r sits at s
            # and the other is at or above it
            att = (A[:, None, :] & geA[None, :, :]) | (A[None, :, :] & geA[:, None, :])
            if clause == "subgroupoid":
                viol = att & notB[T]
            else:
                viol = att[:, None, :, :] & notB[W]
            bad = _first(viol.any(axis=-1))
            if bad is not None:
                u, v = bad[0], bad[-1]
                w = T[bad] if clause == "subgroupoid" else W[bad]
                t, r = next(
                    (ti, ri)
                    for ti in range(len(ts)) if A[u, ti]
                    for ri in range(len(ts)) if A[v, ri] and notB[w, min(ti, ri)]
                )
                return Verdict(False, kind, "quantifier", clause, bad, (ts[t], ts[r]), params)
        else:
            if clause == "left":
                hyp, target = A[None, :, :], notB[T]
            elif clause == "right":
                hyp, target = A[:, None, :], notB[T]
            elif clause == "interior":
                hyp, target = A[None, :, None, :], notB[W]
            else:  # quasi: x_t alpha (f o 1) ^ (1 o f)  =>  x_t beta f
                hyp, target = _relation_matrix(hull.grades, ts, alpha, kk), notB
            viol = hyp & target
            hit = _first(viol)
            if hit is not None:
                return Verdict(False, kind, "quantifier", clause, hit[:-1], (ts[hit[-1]],), params)
    return Verdict(True, kind, "quantifier", params=params)


def quantifier_clause_holds(f: FuzzySubset, clause: str, elements: tuple, thresholds: tuple,
                            alpha="∈", beta="∈∨q_k", k=ZERO) -> bool:
    """Evaluate one instance of a quantifier clause; used to replay witnesses."""
    alpha, beta = relation_name(alpha), relation_name(beta)
    kk = as_k(k).k
    G = f.groupoid
    if clause == "quasi":
        (x,), (t,) = elements, thresholds
        h = quasi_hull(f)
        return not relation_holds(h[x], t, alpha, kk) or relation_holds(f[x], t, beta, kk)
    if clause in ("subgroupoid", "generalized-bi"):
        t, r = thresholds
        if clause == "subgroupoid":
            u, v = elements
            w = G(u, v)
        else:
            u, y, v = elements
            w = G(G(u, y), v)
        hyp = relation_holds(f[u], t, alpha, kk) and relation_holds(f[v], r, alpha, kk)
        return not hyp or relation_holds(f[w], min(t, r), beta, kk)
    (t,) = thresholds
    if clause == "left":
        x, y = elements
        hx, w = y, G(x, y)
    elif clause == "right":
        x, y = elements
        hx, w = x, G(x, y)
    else:
        x, y, z = elements
        hx, w = y, G(G(x, y), z)
    return not relation_holds(f[hx], t, alpha, kk) or relation_holds(f[w], t, beta, kk)


def check(f: FuzzySubset, kind: str, k=ZERO, form: str = "inequality") -> Verdict:
    if form == "inequality":
        return check_threshold_k(f, kind, k)
    if form == "quantifier":
        return check_quantifier(f, kind, "∈", "∈∨q_k", k)
    if form == "classic":
        return check_classic(f, kind)
    raise IdealError(f"unknown form {form!r}")


@dataclass(frozen=True)
class Agreement:
    kind: str
    k: Fraction
    quantifier: Verdict
    inequality: Verdict

    @property
    def agree(self) -> bool:
        return self.quantifier.holds == self.inequality.holds

    def __bool__(self) -> bool:
        return self.agree


def cross_validate(f: FuzzySubset, kind: str, k=ZERO) -> Agreement:
    """Run both the (in, in-or-q_k) quantifier form and the inequality form."""
    kp = as_k(k)
    return Agreement(kind, kp.k, check_quantifier(f, kind, "∈", "∈∨q_k", kp), check_threshold_k(f, kind, kp))
