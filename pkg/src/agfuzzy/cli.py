"""Command-line front end.

Exit status: 0 when the checked property holds, 1 when it fails, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import fixtures
from .catalog import (
    CatalogError,
    catalog,
    classify_structure,
    default_workers,
    enumerate_ag_groupoids,
    make_entry,
    save_catalog,
)
from .fuzzy import ZERO, FuzzyError, FuzzySubset, as_k, grade, level_intervals
from .groupoid import (
    IDEAL_KINDS,
    LAWS,
    Groupoid,
    GroupoidError,
    build_groupoid,
    check_law,
    crisp_profile,
    enumerate_crisp,
    find_left_identity,
    law_sides,
    regularity_profile,
)
from .ideals import KINDS, IdealError, check_classic, check_quantifier, check_threshold_k
from .theorems import (
    COARSE_GRID,
    DEFAULT_BUDGET,
    BudgetExceeded,
    GradeGrid,
    HypothesisNotMet,
    UnknownTheorem,
    get_theorem,
    search_counterexample,
    verify_theorem,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ParseError(ValueError):
    pass


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- file formats

def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_groupoid_file(text: str, name: Optional[str] = None) -> Groupoid:
    """Parse ``n [names...]`` followed by n rows of element names or indices."""
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("line 1: empty groupoid file")
    lineno, head = lines[0]
    toks = head.split()
    try:
        n = int(toks[0])
    except ValueError:
        raise ParseError(f"line {lineno}: expected the order n, got {toks[0]!r}") from None
    if n < 1:
        raise ParseError(f"line {lineno}: order must be at least 1")
    names = toks[1:] or [str(i) for i in range(n)]
    if len(names) != n:
        raise ParseError(f"line {lineno}: {len(names)} names given for order {n}")
    lookup = {s: i for i, s in enumerate(names)}
    rows = lines[1:]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else lineno) + 1
        raise ParseError(f"line {where}: expected {n} table rows, got {len(rows)}")
    table = []
    for lineno, line in rows:
        cells = line.split()
        if len(cells) != n:
            raise ParseError(f"line {lineno}: {len(cells)} entries, expected {n}")
        row = []
        for col, tok in enumerate(cells, start=1):
            if tok in lookup:
                row.append(lookup[tok])
            elif tok.isdigit() and int(tok) < n:
                row.append(int(tok))
            else:
                raise ParseError(f"line {lineno}, column {col}: unknown element {tok!r}")
        table.append(row)
    try:
        return build_groupoid(n, table, names, name)
    except GroupoidError as e:
        raise ParseError(str(e)) from None


def parse_fuzzy_file(text: str, G: Groupoid) -> FuzzySubset:
    """Parse ``name grade`` lines; decimals are read as exact fractions."""
    grades: dict = {}
    for lineno, line in _data_lines(text):
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'name grade'")
        label, value = toks
        try:
            x = G.index(label)
        except GroupoidError:
            raise ParseError(f"line {lineno}: unknown element {label!r}") from None
        if x in grades:
            raise ParseError(f"line {lineno}: duplicate element {label!r}")
        try:
            grades[x] = grade(value)
        except FuzzyError as e:
            raise ParseError(f"line {lineno}: {e}") from None
    missing = [G.label(x) for x in G.elements if x not in grades]
    if missing:
        raise ParseError("unassigned: " + ", ".join(missing))
    return FuzzySubset(G, [grades[x] for x in G.elements])


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


# ---------------------------------------------------------------- run config

@dataclass
class RunConfig:
    command: str
    target: Optional[str] = None
    g: Optional[str] = None
    f: Optional[str] = None
    k: Fraction = ZERO
    grid: GradeGrid = COARSE_GRID
    seed: int = 0
    count: int = 500
    budget: int = DEFAULT_BUDGET
    mode: str = "exhaustive"
    fmt: str = "text"
    extra: dict = field(default_factory=dict)

    def groupoid(self) -> Groupoid:
        if not self.g:
            raise UsageError(f"{self.command} needs --g FILE")
        return parse_groupoid_file(_read(self.g), os.path.basename(self.g))

    def fuzzy(self, G: Groupoid) -> FuzzySubset:
        if not self.f:
            raise UsageError(f"{self.command} needs --f FILE")
        return parse_fuzzy_file(_read(self.f), G)


@dataclass
class Outcome:
    status: int
    report: dict
    lines: list


def _labels(G: Groupoid, subset) -> list:
    return G.labels(subset)


# ---------------------------------------------------------------- commands

def cmd_check_laws(cfg: RunConfig) -> Outcome:
    G = cfg.groupoid()
    laws, lines = {}, []
    for law in LAWS:
        rep = check_law(G, law)
        entry = {"holds": rep.holds}
        if not rep.holds:
            w = rep.witness
            lhs, rhs = law_sides(G, law, w)
            entry.update(witness=[G.label(x) for x in w], lhs=G.label(lhs), rhs=G.label(rhs))
            lines.append(f"{law}: fails at {tuple(G.label(x) for x in w)} ({G.label(lhs)} != {G.label(rhs)})")
        else:
            lines.append(f"{law}: holds")
        laws[law] = entry
    ok = laws["left-invertive"]["holds"]
    lines.append("AG-groupoid: " + ("yes" if ok else "no"))
    return Outcome(EXIT_OK if ok else EXIT_FAIL, {"command": "check-laws", "ag_groupoid": ok, "laws": laws}, lines)


def cmd_classify(cfg: RunConfig) -> Outcome:
    G = cfg.groupoid()
    prof = classify_structure(G)
    reg = prof.regularity
    e = prof.left_identity
    report = {
        "command": "classify",
        "order": prof.order,
        "left_identity": None if e is None else G.label(e),
        "laws": prof.laws,
        "regular": reg.regular,
        "intra_regular": reg.intra_regular,
        "weakly_regular": reg.weakly_regular,
        "ideal_counts": prof.ideal_counts,
    }
    lines = [f"order: {prof.order}", f"left identity: {report['left_identity'] or '-'}"]
    lines += [f"{law}: {'yes' if v else 'no'}" for law, v in prof.laws.items()]
    lines += [f"regular: {reg.regular}", f"intra-regular: {reg.intra_regular}",
              f"weakly regular: {reg.weakly_regular}"]
    lines += [f"#{kind}: {c}" for kind, c in prof.ideal_counts.items()]
    return Outcome(EXIT_OK, report, lines)


def cmd_ideals(cfg: RunConfig) -> Outcome:
    kind = cfg.target
    if kind not in IDEAL_KINDS[1:]:
        raise UsageError(f"unknown ideal kind {kind!r}; choose from {', '.join(IDEAL_KINDS[1:])}")
    G = cfg.groupoid()
    found = [_labels(G, A) for A in enumerate_crisp(G, kind)]
    lines = [f"{len(found)} {kind}(s)"] + ["{" + ", ".join(A) + "}" for A in found]
    return Outcome(EXIT_OK, {"command": "ideals", "kind": kind, "ideals": found}, lines)


def _verdict_dict(G: Groupoid, v) -> dict:
    d = {"holds": v.holds, "form": v.form}
    if not v.holds:
        d["clause"] = v.clause
        d["elements"] = [G.label(x) for x in v.elements]
        d["values"] = [str(x) for x in v.values]
    return d


def cmd_fuzzy_check(cfg: RunConfig) -> Outcome:
    kind = cfg.target
    if kind not in KINDS:
        raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    G = cfg.groupoid()
    f = cfg.fuzzy(G)
    kp = as_k(cfg.k)
    verdicts = {
        "inequality": check_threshold_k(f, kind, kp),
        "quantifier": check_quantifier(f, kind, "in", "in_or_qk", kp),
        "classic": check_classic(f, kind),
    }
    agree = verdicts["inequality"].holds == verdicts["quantifier"].holds
    holds = verdicts["inequality"].holds and agree
    report = {"command": "fuzzy-check", "kind": kind, "k": str(kp.k), "holds": holds,
              "forms_agree": agree, "verdicts": {n: _verdict_dict(G, v) for n, v in verdicts.items()}}
    lines = [f"(in, in-or-q_k) {kind} at k={kp.k}: {'holds' if holds else 'fails'}"]
    for name, v in verdicts.items():
        line = f"  {name}: {'holds' if v.holds else 'fails'}"
        if not v.holds:
            line += f" (clause {v.clause} at {tuple(G.label(x) for x in v.elements)}, values {', '.join(map(str, v.values))})"
        lines.append(line)
    if not agree:
        lines.append("  forms DISAGREE")
    return Outcome(EXIT_OK if holds else EXIT_FAIL, report, lines)


def cmd_level_sets(cfg: RunConfig) -> Outcome:
    G = cfg.groupoid()
    f = cfg.fuzzy(G)
    pieces = []
    for lo, hi, A in level_intervals(f):
        pieces.append({"interval": f"({lo},{hi}]", "set": _labels(G, A),
                       "bi_ideal": bool(A) and crisp_profile(G, A)["bi-ideal"]})
    lines = []
    for p in pieces:
        s = "{" + ", ".join(p["set"]) + "}" if p["set"] else "{}"
        lines.append(f"t in {p['interval']}: f_t = {s}" + ("  bi-ideal" if p["bi_ideal"] else ""))
    return Outcome(EXIT_OK, {"command": "level-sets", "pieces": pieces}, lines)


def cmd_theorem(cfg: RunConfig) -> Outcome:
    th = get_theorem(cfg.target)
    G = cfg.groupoid()
    rep = verify_theorem(G, th.id, cfg.grid, cfg.k, mode=cfg.mode, seed=cfg.seed,
                         count=cfg.count, budget=cfg.budget)
    report = {"command": "theorem", **rep.as_dict()}
    lines = [f"{th.id}: {th.citation}",
             f"groupoid {rep.as_dict()['groupoid']}, k={rep.k}, grid {rep.grid}, {rep.mode}",
             "side conditions: " + (", ".join(f"{c}={v}" for c, v in rep.conditions.items()) or "none")]
    for v in rep.variants:
        tag = "pinned" if v.pinned else "reported"
        line = f"  variant {v.name} [{tag}]: {'holds' if v.holds else 'FAILS'} ({v.checked} checked"
        line += ", truncated)" if v.truncated else ")"
        lines.append(line)
        if v.counterexample is not None:
            cx = v.counterexample.as_dict()
            lines.append(f"    counterexample: operands {cx['operands']}, at {cx['element']}: "
                         f"{cx['lhs']} {cx['relation']} {cx['rhs']} fails {cx['detail']}".rstrip())
    lines.append("verdict: " + ("holds" if rep.holds else "fails"))
    return Outcome(EXIT_OK if rep.holds else EXIT_FAIL, report, lines)


def cmd_search(cfg: RunConfig) -> Outcome:
    th = get_theorem(cfg.target)
    if cfg.g:
        pool = [cfg.groupoid()]
    else:
        pool = catalog(cfg.extra.get("order", 3))
    res = search_counterexample(th.id, pool, cfg.grid, cfg.k, budget=cfg.budget)
    report = {"command": "search-counterexample", "citation": th.citation, "k": str(as_k(cfg.k).k),
              "grid": str(cfg.grid), **res.as_dict()}
    lines = [f"{th.id}: scanned {res.scanned} groupoid(s)"]
    if res.counterexample is None:
        lines.append(f"no counterexample ({res.note})")
    else:
        cx = res.counterexample.as_dict()
        lines.append(f"counterexample [{cx['variant']}] on table {cx['groupoid']['table']}")
        lines.append(f"  operands {cx['operands']}, k={cx['k']}, at {cx['element']}: "
                     f"{cx['lhs']} {cx['relation']} {cx['rhs']} fails {cx['detail']}".rstrip())
        lines.append("  replays: " + str(res.counterexample.reproduces()))
    return Outcome(EXIT_OK, report, lines)


def cmd_enumerate(cfg: RunConfig) -> Outcome:
    try:
        n = int(cfg.target)
    except (TypeError, ValueError):
        raise UsageError(f"enumerate needs an integer order, got {cfg.target!r}") from None
    ex = cfg.extra
    groupoids = list(enumerate_ag_groupoids(n, ex.get("ident", False), ex.get("iso", False),
                                            ex.get("long_running", False), ex.get("workers", 1)))
    report = {"command": "enumerate", "order": n, "up_to_iso": ex.get("iso", False),
              "require_left_identity": ex.get("ident", False), "count": len(groupoids)}
    lines = [f"{len(groupoids)} AG-groupoid(s) of order {n}"]
    out = ex.get("out")
    if out:
        save_catalog([make_entry(G) for G in groupoids], out, n, ex.get("iso", False), ex.get("ident", False))
        report["written"] = out
        lines.append(f"catalog written to {out}")
    elif ex.get("tables"):
        report["tables"] = [list(G.flat()) for G in groupoids]
        lines += [" ".join(map(str, G.flat())) for G in groupoids]
    return Outcome(EXIT_OK, report, lines)


def demo_facts() -> list:
    """(description, expected, observed) for each reproduced worked-example fact."""
    facts = []
    S5 = fixtures.five_element()
    add = lambda what, exp, got: facts.append((what, exp, got))
    add("S5 left invertive", True, check_law(S5, "left-invertive").holds)
    add("S5 medial", True, check_law(S5, "medial").holds)
    add("S5 left identity", "d", S5.label(find_left_identity(S5)))
    add("S5 {a} bi-ideal", True, crisp_profile(S5, {0})["bi-ideal"])
    add("S5 {a,b} bi-ideal", True, crisp_profile(S5, {0, 1})["bi-ideal"])
    f = fixtures.five_element_grades()
    pieces = [(f"({lo},{hi}]", "".join(S5.labels(A))) for lo, hi, A in level_intervals(f)]
    add("f level sets", [("(0,3/10]", "abcde"), ("(3/10,7/10]", "ab"), ("(7/10,4/5]", "a"), ("(4/5,1]", "")],
        pieces)
    add("f fuzzy bi-ideal", True, check_classic(f, "bi-ideal").holds)
    add("f (in,in-or-q) bi-ideal", True, check_quantifier(f, "bi-ideal", "in", "in_or_q").holds)
    S6 = fixtures.six_element()
    add("S6 left identity", "6", S6.label(find_left_identity(S6)))
    add("S6 weakly regular", True, regularity_profile(S6).weakly_regular)
    for a, x, y in fixtures.SIX_ELEMENT_WEAK_WITNESSES:
        i, j, l = S6.index(a), S6.index(x), S6.index(y)
        add(f"S6 {a} = ({a}*{x})({a}*{y})", a, S6.label(S6(S6(i, j), S6(i, l))))
    return facts


def cmd_demo(cfg: RunConfig) -> Outcome:
    facts = demo_facts()
    ok = all(exp == got for _, exp, got in facts)

    def show(v):
        return v if isinstance(v, (bool, str)) else json.loads(json.dumps(v))

    report = {"command": "demo-paper", "reproduced": ok,
              "facts": [{"fact": w, "expected": show(e), "observed": show(g), "ok": e == g} for w, e, g in facts]}
    lines = [f"[{'ok' if e == g else 'MISMATCH'}] {w}: {g}" for w, e, g in facts]
    lines.append("all facts reproduced" if ok else "some facts did not reproduce")
    return Outcome(EXIT_OK if ok else EXIT_FAIL, report, lines)


COMMANDS = {
    "check-laws": cmd_check_laws,
    "classify": cmd_classify,
    "ideals": cmd_ideals,
    "fuzzy-check": cmd_fuzzy_check,
    "level-sets": cmd_level_sets,
    "theorem": cmd_theorem,
    "search-counterexample": cmd_search,
    "enumerate": cmd_enumerate,
    "demo-paper": cmd_demo,
}


def run_command(cfg: RunConfig) -> Outcome:
    try:
        return COMMANDS[cfg.command](cfg)
    except (ParseError, UsageError, HypothesisNotMet, UnknownTheorem, BudgetExceeded,
            CatalogError, IdealError, FuzzyError, GroupoidError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        if isinstance(e, UnknownTheorem):
            msg = f"unknown theorem id {msg!r}"
        return Outcome(EXIT_USAGE, {"command": cfg.command, "error": msg}, [f"error: {msg}"])


# ---------------------------------------------------------------- argument parsing

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", help="groupoid file")
    p.add_argument("--f", help="fuzzy subset file")
    p.add_argument("--k", default="0", help="k in [0,1), as a fraction or decimal")
    p.add_argument("--grid", default=str(COARSE_GRID), help="comma-separated grades including 0 and 1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration budget (default $AGFUZZY_BUDGET or 10^7)")
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agfuzzy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check-laws", "classify", "level-sets", "demo-paper"):
        _common(sub.add_parser(name))
    p = sub.add_parser("ideals")
    p.add_argument("target", metavar="kind")
    _common(p)
    p = sub.add_parser("fuzzy-check")
    p.add_argument("target", metavar="kind")
    _common(p)
    p = sub.add_parser("theorem")
    p.add_argument("target", metavar="id")
    _common(p)
    p = sub.add_parser("search-counterexample")
    p.add_argument("target", metavar="id")
    p.add_argument("--order", type=int, default=3, help="catalog slice: orders 1..N (default 3)")
    _common(p)
    p = sub.add_parser("enumerate")
    p.add_argument("target", metavar="n")
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--ident", action="store_true", help="only groupoids with a left identity")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--long-running", action="store_true", help="allow order 5")
    p.add_argument("--tables", action="store_true", help="list the tables")
    p.add_argument("--out", help="write a catalog file")
    _common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    try:
        k = as_k(ns.k).k
    except (FuzzyError, ValueError) as e:
        raise UsageError(f"bad --k: {e}") from None
    try:
        grid = GradeGrid.parse(ns.grid)
    except (FuzzyError, ValueError) as e:
        raise UsageError(f"bad --grid: {e}") from None
    budget = ns.budget
    if budget is None:
        env = os.environ.get("AGFUZZY_BUDGET")
        try:
            budget = int(env) if env else DEFAULT_BUDGET
        except ValueError:
            raise UsageError(f"bad AGFUZZY_BUDGET {env!r}") from None
    extra = {}
    if ns.command == "enumerate":
        extra = {"iso": ns.iso, "ident": ns.ident, "long_running": ns.long_running, "tables": ns.tables,
                 "out": ns.out, "workers": ns.workers if ns.workers else default_workers()}
    elif ns.command == "search-counterexample":
        extra = {"order": ns.order}
    return RunConfig(ns.command, getattr(ns, "target", None), ns.g, ns.f, k, grid, ns.seed, ns.count,
                     budget, ns.mode, ns.fmt, extra)


def render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(outcome.report, sort_keys=True, indent=2, default=str)
    return "\n".join(outcome.lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
    except UsageError as e:
        outcome = Outcome(EXIT_USAGE, {"command": ns.command, "error": str(e)}, [f"error: {e}"])
        print(render(outcome, ns.fmt), file=sys.stdout if ns.fmt == "json" else sys.stderr)
        return outcome.status
    outcome = run_command(cfg)
    err = outcome.status == EXIT_USAGE and cfg.fmt == "text"
    print(render(outcome, cfg.fmt), file=sys.stderr if err else sys.stdout)
    return outcome.status


if __name__ == "__main__":
    sys.exit(main())
