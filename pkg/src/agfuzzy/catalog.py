"""Isomorph-free enumeration of small AG-groupoids and a plain-text catalog format.

Tables are filled cell by cell in row-major order.  Every time a cell is
assigned, each instance of the left invertive law (ab)c = (cb)a that the
new cell completes is checked, so a branch dies as soon as it contains a
violation.  Branches are split on the first row, which lets the search be
fanned out over worker processes and merged back in branch order.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .groupoid import (
    IDEAL_KINDS,
    LAWS,
    Groupoid,
    RegularityProfile,
    check_law,
    crisp_profile,
    all_subsets,
    find_left_identity,
    from_flat,
    regularity_profile,
)

EXHAUSTIVE_LIMIT = 4
HARD_LIMIT = 5
FORMAT_VERSION = 1


class CatalogError(ValueError):
    pass


# ---------------------------------------------------------------- search

def _extends(t: list, n: int, i: int, j: int) -> bool:
    """Check the law instances completed by the freshly assigned cell (i, j)."""
    v = t[i * n + j]
    for c in range(n):
        # cell as (a, b): (ij)c vs (cj)i
        lhs = t[v * n + c]
        cb = t[c * n + j]
        if lhs >= 0 and cb >= 0:
            rhs = t[cb * n + i]
            if rhs >= 0 and lhs != rhs:
                return False
        # cell as (c, b): (aj)i vs (ij)a, with a = c
        ab = t[c * n + j]
        if ab >= 0:
            lhs = t[ab * n + i]
            rhs = t[v * n + c]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    for a in range(n):
        for b in range(n):
            if t[a * n + b] != i:
                continue
            # cell as ((ab), c) with c = j: v vs (jb)a
            jb = t[j * n + b]
            if jb >= 0:
                rhs = t[jb * n + a]
                if rhs >= 0 and v != rhs:
                    return False
            # cell as ((cb), a) with a = j, c = a: (jb)a' vs v
            if jb >= 0:
                lhs = t[jb * n + a]
                if lhs >= 0 and lhs != v:
                    return False
    return True


def _search(n: int, prefix: Sequence[int]) -> list:
    """All left invertive tables extending ``prefix`` (first cells, row-major)."""
    size = n * n
    t = [-1] * size
    for p, v in enumerate(prefix):
        t[p] = v
        if not _extends(t, n, p // n, p % n):
            return []
    out = []

    def rec(pos: int) -> None:
        if pos == size:
            out.append(tuple(t))
            return
        i, j = divmod(pos, n)
        for v in range(n):
            t[pos] = v
            if _extends(t, n, i, j):
                rec(pos + 1)
        t[pos] = -1

    rec(len(prefix))
    return out


def _branch(args) -> list:
    n, prefix, require_left_identity, up_to_iso = args
    keep = []
    for flat in _search(n, prefix):
        if require_left_identity and not _has_left_identity(flat, n):
            continue
        if up_to_iso and canonical_flat(flat, n) != flat:
            continue
        keep.append(flat)
    return keep


def _has_left_identity(flat: tuple, n: int) -> bool:
    ident = tuple(range(n))
    return any(flat[e * n:(e + 1) * n] == ident for e in range(n))


def enumerate_ag_groupoids(n: int, require_left_identity: bool = False, up_to_iso: bool = False,
                           long_running: bool = False, workers: int = 1) -> Iterator[Groupoid]:
    """Yield every AG-groupoid on n labelled elements (canonical ones if ``up_to_iso``).

    The output order is the row-major lexicographic order of the tables,
    independent of ``workers``.
    """
    if n < 1:
        raise CatalogError("order must be at least 1")
    if n > HARD_LIMIT or (n > EXHAUSTIVE_LIMIT and not long_running):
        raise CatalogError(f"order {n} above the exhaustive limit {EXHAUSTIVE_LIMIT}"
                           " (order 5 needs long_running=True)")
    jobs = [(n, row, require_left_identity, up_to_iso)
            for row in itertools.product(range(n), repeat=n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_branch, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            results = list(chunks)
    else:
        results = map(_branch, jobs)
    for chunk in results:
        for flat in chunk:
            yield from_flat(flat)


def brute_force_count(n: int) -> int:
    """Count left invertive tables on n elements by filtering all n^(n^2) tables."""
    count = 0
    for flat in itertools.product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if all(t[t[a][b]][c] == t[t[c][b]][a]
               for a in range(n) for b in range(n) for c in range(n)):
            count += 1
    return count


# ---------------------------------------------------------------- canonical form

@lru_cache(maxsize=None)
def _perms(n: int):
    P = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return P, np.argsort(P, axis=1)


def relabelings(flat: Sequence[int], n: int) -> np.ndarray:
    """All n! relabelled tables, one flattened table per row."""
    P, inv = _perms(n)
    T = np.asarray(flat, dtype=np.int64).reshape(n, n)
    # sigma relabels i -> sigma[i]; new[p, q] = sigma[T[inv p, inv q]]
    sub = T[inv[:, :, None], inv[:, None, :]]
    new = np.take_along_axis(P, sub.reshape(len(P), -1), axis=1)
    return new


def canonical_flat(flat: Sequence[int], n: int) -> tuple:
    rows = relabelings(flat, n)
    best = rows[np.lexsort(rows.T[::-1])[0]]
    return tuple(int(v) for v in best)


def canonical_form(G: Groupoid) -> tuple:
    """Lexicographically least flattened table over all relabelings, as rows."""
    n = G.order
    flat = canonical_flat(G.flat(), n)
    return tuple(flat[i * n:(i + 1) * n] for i in range(n))


def canonical_groupoid(G: Groupoid) -> Groupoid:
    return from_flat(canonical_flat(G.flat(), G.order))


# ---------------------------------------------------------------- classification

@dataclass(frozen=True)
class StructureProfile:
    order: int
    left_identity: Optional[int]
    laws: dict
    regularity: RegularityProfile
    ideal_counts: dict

    @property
    def has_left_identity(self) -> bool:
        return self.left_identity is not None

    def flags(self) -> dict:
        """The flat key=value view written to catalog files."""
        out = {"ident": "-" if self.left_identity is None else str(self.left_identity)}
        for law in LAWS:
            out[law] = str(int(self.laws[law]))
        out["regular"] = str(int(self.regularity.regular))
        out["intra-regular"] = str(int(self.regularity.intra_regular))
        out["weakly-regular"] = str(int(self.regularity.weakly_regular))
        for kind in IDEAL_KINDS[1:]:
            out["n-" + kind] = str(self.ideal_counts[kind])
        return out


def classify_structure(G: Groupoid) -> StructureProfile:
    counts = dict.fromkeys(IDEAL_KINDS[1:], 0)
    for A in all_subsets(G.order):
        flags = crisp_profile(G, A).flags
        for kind in counts:
            counts[kind] += flags[kind]
    return StructureProfile(
        order=G.order,
        left_identity=find_left_identity(G),
        laws={law: check_law(G, law).holds for law in LAWS},
        regularity=regularity_profile(G),
        ideal_counts=counts,
    )


@dataclass(frozen=True)
class CatalogEntry:
    table: tuple
    profile: StructureProfile

    @property
    def groupoid(self) -> Groupoid:
        return from_flat(self.table)


def make_entry(G: Groupoid) -> CatalogEntry:
    return CatalogEntry(G.flat(), classify_structure(G))


@lru_cache(maxsize=None)
def catalog(max_order: int = 3, up_to_iso: bool = True, require_left_identity: bool = False) -> tuple:
    """All AG-groupoids of order 1..max_order (cached)."""
    out = []
    for n in range(1, max_order + 1):
        for G in enumerate_ag_groupoids(n, require_left_identity, up_to_iso,
                                        long_running=n > EXHAUSTIVE_LIMIT):
            out.append(G)
    return tuple(out)


# ---------------------------------------------------------------- file format

def save_catalog(entries: Sequence[CatalogEntry], path, n: Optional[int] = None,
                 up_to_iso: bool = True, require_left_identity: bool = False) -> None:
    entries = list(entries)
    if n is None:
        if not entries:
            raise CatalogError("order n is required for an empty catalog")
        n = int(round(len(entries[0].table) ** 0.5))
    lines = [f"agcat {FORMAT_VERSION} n={n} iso={int(up_to_iso)} ident={int(require_left_identity)}"]
    for e in entries:
        if len(e.table) != n * n:
            raise CatalogError(f"entry of order {len(e.table) ** 0.5:g} in an order-{n} catalog")
        flags = " ".join(f"{k}={v}" for k, v in e.profile.flags().items())
        lines.append(" ".join(map(str, e.table)) + " | " + flags)
    lines.append(f"count={len(entries)}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_header(line: str) -> dict:
    parts = line.split()
    if len(parts) != 5 or parts[0] != "agcat":
        raise CatalogError("line 1: malformed header")
    if parts[1] != str(FORMAT_VERSION):
        raise CatalogError(f"line 1: unsupported format version {parts[1]}")
    try:
        opts = dict(p.split("=", 1) for p in parts[2:])
        return {"n": int(opts["n"]), "iso": opts["iso"] == "1", "ident": opts["ident"] == "1"}
    except (KeyError, ValueError):
        raise CatalogError("line 1: malformed header") from None


def load_catalog(path) -> list:
    """Read a catalog, re-validating every table and its stored profile."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise CatalogError("line 1: empty file")
    head = _parse_header(lines[0])
    n = head["n"]
    entries = []
    seen_count = None
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if seen_count is not None:
            raise CatalogError(f"line {lineno}: data after the count line")
        if line.startswith("count="):
            try:
                seen_count = int(line[len("count="):])
            except ValueError:
                raise CatalogError(f"line {lineno}: malformed count line") from None
            continue
        table_part, sep, flag_part = line.partition("|")
        if not sep:
            raise CatalogError(f"line {lineno}: missing '|' separator")
        try:
            flat = tuple(int(tok) for tok in table_part.split())
            flags = dict(tok.split("=", 1) for tok in flag_part.split())
        except ValueError:
            raise CatalogError(f"line {lineno}: malformed entry") from None
        if len(flat) != n * n or any(not 0 <= v < n for v in flat):
            raise CatalogError(f"line {lineno}: table is not an order-{n} table")
        G = from_flat(flat)
        report = check_law(G, "left-invertive")
        if not report.holds:
            raise CatalogError(f"line {lineno}: table violates the left invertive law at {report.witness}")
        entry = make_entry(G)
        if entry.profile.flags() != flags:
            raise CatalogError(f"line {lineno}: stored profile does not match the table")
        entries.append(entry)
    if seen_count is None:
        raise CatalogError(f"line {len(lines) + 1}: missing count line")
    if seen_count != len(entries):
        raise CatalogError(f"checksum mismatch: count={seen_count} but {len(entries)} entries")
    return entries


def default_workers() -> int:
    return int(os.environ.get("AGFUZZY_WORKERS", "1"))
