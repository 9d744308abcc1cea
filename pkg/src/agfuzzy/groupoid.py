"""Finite groupoids given by Cayley tables: law checks, crisp ideals, regularity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

LAWS = (
    "left-invertive",
    "medial",
    "paramedial",
    "left-identity-law4",
    "commutative",
    "associative",
)

IDEAL_KINDS = (
    "nonempty",
    "subgroupoid",
    "left-ideal",
    "right-ideal",
    "two-sided-ideal",
    "bi-ideal",
    "generalized-bi-ideal",
    "interior-ideal",
    "quasi-ideal",
)

DEFAULT_POWERSET_LIMIT = 12


class GroupoidError(ValueError):
    pass


@dataclass(frozen=True)
class Groupoid:
    """A finite magma on {0, ..., n-1}; ``table[i][j]`` is the index of i*j."""

    table: tuple
    names: tuple = ()
    name: Optional[str] = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def cube(self) -> np.ndarray:
        """``cube[x, y, z] = (xy)z``."""
        t = self.array
        return t[t[:, :, None], np.arange(self.order)[None, None, :]]

    @property
    def elements(self) -> range:
        return range(self.order)

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, label) -> int:
        """Resolve an element given by name or index."""
        if isinstance(label, str):
            try:
                return self.names.index(label)
            except ValueError:
                raise GroupoidError(f"unknown element name {label!r}") from None
        if not 0 <= label < self.order:
            raise GroupoidError(f"element index {label} out of range")
        return int(label)

    def label(self, i: int) -> str:
        return self.names[i]

    def labels(self, subset: Iterable[int]) -> list:
        return [self.names[i] for i in sorted(subset)]

    def flat(self) -> tuple:
        return tuple(v for row in self.table for v in row)

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Groupoid{tag} order={self.order} table={self.flat()}>"


def build_groupoid(n: int, table: Sequence[Sequence[int]], names=None, name=None) -> Groupoid:
    if n < 1:
        raise GroupoidError("order must be at least 1")
    rows = [list(r) for r in table]
    if len(rows) != n:
        raise GroupoidError(f"expected {n} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GroupoidError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if isinstance(v, bool) or int(v) != v or not 0 <= v < n:
                raise GroupoidError(f"out-of-range entry at ({i},{j})")
    if names is None:
        names = [str(i) for i in range(n)]
    names = tuple(str(s) for s in names)
    if len(names) != n:
        raise GroupoidError(f"expected {n} names, got {len(names)}")
    if len(set(names)) != n:
        dup = next(s for s in names if names.count(s) > 1)
        raise GroupoidError(f"duplicate name {dup!r}")
    return Groupoid(tuple(tuple(int(v) for v in row) for row in rows), names, name)


def from_flat(flat: Sequence[int], names=None, name=None) -> Groupoid:
    n = int(round(len(flat) ** 0.5))
    if n * n != len(flat):
        raise GroupoidError(f"flat table of length {len(flat)} is not square")
    return build_groupoid(n, [flat[i * n:(i + 1) * n] for i in range(n)], names, name)


# ---------------------------------------------------------------- laws

@dataclass(frozen=True)
class LawReport:
    law: str
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


def _law_sides(G: Groupoid, law: str, w: tuple):
    m = G.__call__
    if law == "left-invertive":
        a, b, c = w
        return m(m(a, b), c), m(m(c, b), a)
    if law == "medial":
        a, b, c, d = w
        return m(m(a, b), m(c, d)), m(m(a, c), m(b, d))
    if law == "paramedial":
        a, b, c, d = w
        return m(m(a, b), m(c, d)), m(m(d, b), m(c, a))
    if law == "left-identity-law4":
        a, b, c = w
        return m(a, m(b, c)), m(b, m(a, c))
    if law == "commutative":
        a, b = w
        return m(a, b), m(b, a)
    if law == "associative":
        a, b, c = w
        return m(m(a, b), c), m(a, m(b, c))
    raise GroupoidError(f"unknown law {law!r}")


_ARITY = {"left-invertive": 3, "medial": 4, "paramedial": 4,
          "left-identity-law4": 3, "commutative": 2, "associative": 3}


def law_sides(G: Groupoid, law: str, witness: tuple) -> tuple:
    """Evaluate both sides of ``law`` at ``witness``; used to replay reports."""
    return _law_sides(G, law, witness)


def check_law(G: Groupoid, law: str) -> LawReport:
    """Exhaustive check; the witness is the lexicographically first violation."""
    if law not in _ARITY:
        raise GroupoidError(f"unknown law {law!r}")
    t = G.array
    n = G.order
    r = np.arange(n)
    # axes are (a, b, c[, d])
    if law == "left-invertive":
        lhs = G.cube                                         # (ab)c
        rhs = t[t.T[None, :, :], r[:, None, None]]           # (cb)a
    elif law == "associative":
        lhs = G.cube
        rhs = t[r[:, None, None], t[None, :, :]]
    elif law == "left-identity-law4":
        lhs = t[r[:, None, None], t[None, :, :]]             # a(bc)
        rhs = t[r[None, :, None], t[:, None, :]]             # b(ac)
    elif law == "commutative":
        lhs, rhs = t, t.T
    else:
        ab = t[:, :, None, None]
        cd = t[None, None, :, :]
        lhs = t[ab, cd]
        if law == "medial":
            ac = t[:, None, :, None]
            bd = t[None, :, None, :]
            rhs = t[ac, bd]
        else:
            db = t.T[None, :, None, :]     # [a,b,c,d] -> t[d,b]
            ca = t.T[:, None, :, None]     # [a,b,c,d] -> t[c,a]
            rhs = t[db, ca]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return LawReport(law, False, tuple(int(v) for v in bad[0]))
    return LawReport(law, True)


@dataclass(frozen=True)
class IdentitySearch:
    element: Optional[int]
    unique: bool = True


def left_identities(G: Groupoid) -> list:
    return [e for e in G.elements if G.table[e] == tuple(G.elements)]


def find_left_identity(G: Groupoid) -> Optional[int]:
    """The smallest e with e*x = x for all x, or None."""
    ids = left_identities(G)
    return ids[0] if ids else None


def left_identity_search(G: Groupoid) -> IdentitySearch:
    ids = left_identities(G)
    return IdentitySearch(ids[0] if ids else None, len(ids) <= 1)


def right_identities(G: Groupoid) -> list:
    return [e for e in G.elements if all(G.table[x][e] == x for x in G.elements)]


# ---------------------------------------------------------------- subsets

def subset_product(G: Groupoid, A: Iterable[int], B: Iterable[int]) -> frozenset:
    B = tuple(B)
    return frozenset(G.table[a][b] for a in A for b in B)


@dataclass(frozen=True)
class CrispIdealProfile:
    subset: frozenset
    flags: dict

    def __getitem__(self, kind: str) -> bool:
        return self.flags[kind]


def crisp_profile(G: Groupoid, A: Iterable[int]) -> CrispIdealProfile:
    A = frozenset(A)
    S = frozenset(G.elements)
    nonempty = bool(A)
    AA = subset_product(G, A, A)
    SA = subset_product(G, S, A)
    AS = subset_product(G, A, S)
    sub = nonempty and AA <= A
    left = nonempty and SA <= A
    right = nonempty and AS <= A
    genbi = nonempty and subset_product(G, AS, A) <= A
    flags = {
        "nonempty": nonempty,
        "subgroupoid": sub,
        "left-ideal": left,
        "right-ideal": right,
        "two-sided-ideal": left and right,
        "bi-ideal": sub and genbi,
        "generalized-bi-ideal": genbi,
        "interior-ideal": sub and subset_product(G, SA, S) <= A,
        "quasi-ideal": nonempty and (SA & AS) <= A,
    }
    return CrispIdealProfile(A, flags)


def all_subsets(n: int):
    """Nonempty subsets of range(n) in (size, lexicographic) order."""
    for size in range(1, n + 1):
        for c in itertools.combinations(range(n), size):
            yield frozenset(c)


def enumerate_crisp(G: Groupoid, kind: str, limit: int = DEFAULT_POWERSET_LIMIT) -> list:
    if kind not in IDEAL_KINDS:
        raise GroupoidError(f"unknown ideal kind {kind!r}")
    if G.order > limit:
        raise GroupoidError(f"order {G.order} exceeds powerset limit {limit}")
    return [A for A in all_subsets(G.order) if crisp_profile(G, A)[kind]]


# ---------------------------------------------------------------- regularity

@dataclass(frozen=True)
class RegularityProfile:
    regular: bool
    regular_witnesses: dict
    intra_regular: bool
    intra_regular_witnesses: dict
    weakly_regular: bool
    weakly_regular_witnesses: dict
    left_identity: Optional[int]


def regular_witness(G: Groupoid, a: int) -> Optional[int]:
    m = G.table
    for x in G.elements:
        if m[m[a][x]][a] == a:
            return x
    return None


def intra_regular_witness(G: Groupoid, a: int) -> Optional[tuple]:
    m = G.table
    a2 = m[a][a]
    for x in G.elements:
        xa2 = m[x][a2]
        for y in G.elements:
            if m[xa2][y] == a:
                return (x, y)
    return None


def weakly_regular_witness(G: Groupoid, a: int) -> Optional[tuple]:
    m = G.table
    for x in G.elements:
        ax = m[a][x]
        for y in G.elements:
            if m[ax][m[a][y]] == a:
                return (x, y)
    return None


def regularity_profile(G: Groupoid) -> RegularityProfile:
    reg = {a: regular_witness(G, a) for a in G.elements}
    intra = {a: intra_regular_witness(G, a) for a in G.elements}
    weak = {a: weakly_regular_witness(G, a) for a in G.elements}
    return RegularityProfile(
        regular=None not in reg.values(),
        regular_witnesses={a: w for a, w in reg.items() if w is not None},
        intra_regular=None not in intra.values(),
        intra_regular_witnesses={a: w for a, w in intra.items() if w is not None},
        weakly_regular=None not in weak.values(),
        weakly_regular_witnesses={a: w for a, w in weak.items() if w is not None},
        left_identity=find_left_identity(G),
    )


def is_regular(G: Groupoid) -> bool:
    return all(regular_witness(G, a) is not None for a in G.elements)


def is_intra_regular(G: Groupoid) -> bool:
    return all(intra_regular_witness(G, a) is not None for a in G.elements)


def is_weakly_regular(G: Groupoid) -> bool:
    return all(weakly_regular_witness(G, a) is not None for a in G.elements)
