"""Command-line front end.

    resclose compute --family complete:5
    resclose verify --theorem cut_vertices --n 9 --param 5
    resclose enumerate --n 4
    resclose sweep --theorems all --n-min 5 --n-max 7 --csv summary.csv
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Sequence

from .canon import canonical_graph6
from .dyadic import Dyadic
from .enumerate import EnumerationError, enumerate_connected, enumerate_graphs
from .families import FamilyError, FamilyKind, FamilySpec, pk_lengths
from .formulas import (
    FormulaError,
    TheoremCase,
    TheoremId,
    bound,
    complete_value,
    eq_mm_value,
    lemma_clique_join_value,
    star_value,
)
from .graph import Graph, Graph6Error, GraphError, closeness, from_edges, graph6_decode, graph6_encode, read_graph6_lines
from .invariants import InvariantCapError, all_parameters
from .residual import link_residual_closeness, vertex_residual_closeness
from .search import CSV_HEADER, Verdict, default_jobs, sweep, verify

USAGE_ERRORS = (
    ValueError,
    FamilyError,
    FormulaError,
    GraphError,
    Graph6Error,
    EnumerationError,
    InvariantCapError,
)


class UsageError(Exception):
    pass


def _value(v: Dyadic | None):
    if v is None:
        return None
    return {"fraction": v.fraction_str(), "decimal": v.decimal_str()}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    for tok in text.replace(";", ",").split(","):
        tok = tok.strip()
        if not tok:
            continue
        a, sep, b = tok.partition("-")
        if not sep:
            raise UsageError(f"edge {tok!r} should look like 'u-v'")
        edges.append((int(a), int(b)))
    return edges


def _graph_from_args(args) -> Graph:
    given = [x for x in (args.graph6, args.edges, args.family) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --family")
    if args.graph6 is not None:
        return graph6_decode(args.graph6)
    if args.family is not None:
        return FamilySpec.parse(args.family).build()
    edges = _parse_edges(args.edges)
    order = args.order
    if order is None:
        order = 1 + max((max(e) for e in edges), default=0)
    return from_edges(order, edges)


def _describe(g: Graph) -> dict:
    res = link_residual_closeness(g)
    return {
        "order": g.order,
        "graph6": graph6_encode(g),
        "edges": [list(e) for e in g.edges()],
        "closeness": _value(closeness(g)),
        "linkResidual": _value(res.value),
        "criticalEdges": [list(e) for e in res.critical_edges],
        "vertexResidual": _value(vertex_residual_closeness(g)) if g.order >= 2 else None,
        "parameters": {k.value: v for k, v in all_parameters(g).items()},
    }


def cmd_compute(args) -> int:
    _emit(_describe(_graph_from_args(args)))
    return 0


def _formula_value(spec: FamilySpec) -> Dyadic | None:
    p = spec.params
    k = spec.kind
    if k is FamilyKind.CLIQUE_JOIN and p[0] >= 1 and len(p) >= 3:
        return lemma_clique_join_value(p[0], p[1:])
    if k is FamilyKind.K_PENDANT_PATHS and sum(p) >= 2:
        return eq_mm_value(p)
    if k is FamilyKind.PK:
        return eq_mm_value(pk_lengths(*p))
    if k is FamilyKind.COMPLETE and p[0] >= 2:
        return complete_value(p[0])
    if k is FamilyKind.STAR:
        return star_value(p[0])
    return None


def cmd_family(args) -> int:
    spec = FamilySpec.parse(args.spec)
    g = spec.build()
    out = {"family": str(spec), **_describe(g)}
    code = 0
    if args.value:
        formula = _formula_value(spec)
        out["formulaValue"] = _value(formula)
        if formula is not None:
            agree = formula == link_residual_closeness(g).value
            out["formulaAgrees"] = agree
            code = 0 if agree else 1
    _emit(out)
    return code


def _case(args) -> TheoremCase:
    return TheoremCase(TheoremId.parse(args.theorem), args.n, args.param)


def cmd_bound(args) -> int:
    case = _case(args)
    res = bound(case)
    _emit({
        "case": case.as_dict(),
        "bound": _value(res.bound),
        "extremal": [str(s) for s in res.extremal],
        "extremalGraph6": sorted({canonical_graph6(s.build()) for s in res.extremal}),
        "notes": res.notes,
    })
    return 0


def _read_source(path: str):
    if path == "-":
        return list(read_graph6_lines(sys.stdin))
    with open(path) as fh:
        return list(read_graph6_lines(fh))


def cmd_verify(args) -> int:
    case = _case(args)
    source = _read_source(args.input) if args.input else None
    report = verify(case, source, jobs=args.jobs)
    _emit(report.to_dict())
    return 0 if report.verdict is Verdict.MATCH else 1


def cmd_enumerate(args) -> int:
    gen = enumerate_graphs(args.n) if args.all else enumerate_connected(args.n)
    out = sys.stdout
    for g in gen:
        out.write(graph6_encode(g) + "\n")
    return 0


def _parse_ids(text: str) -> list[TheoremId]:
    if text.strip().lower() == "all":
        return list(TheoremId)
    return [TheoremId.parse(t) for t in text.split(",") if t.strip()]


def cmd_sweep(args) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    reports = sweep(_parse_ids(args.theorems), range(args.n_min, args.n_max + 1), jobs=args.jobs)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_HEADER)
            for r in reports:
                w.writerow(r.csv_row())
    _emit([r.to_dict() for r in reports])
    return 0 if all(r.verdict is Verdict.MATCH for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resclose", description="Exact link residual closeness of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="closeness, residual closeness and parameters of one graph")
    p.add_argument("--graph6")
    p.add_argument("--edges", help="comma-separated u-v pairs")
    p.add_argument("--order", type=int, help="vertex count for --edges (default: max label + 1)")
    p.add_argument("--family", help="<kind>:<comma-separated ints>, e.g. pk:9,5")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="build a named family member")
    p.add_argument("spec", help="<kind>:<comma-separated ints>; kinds: " + ", ".join(k.value for k in FamilyKind))
    p.add_argument("--value", action="store_true", help="also evaluate the closed-form value and compare")
    p.set_defaults(func=cmd_family)

    def theorem_args(q):
        q.add_argument("--theorem", required=True, help=", ".join(t.value for t in TheoremId))
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--param", type=int, default=0)

    p = sub.add_parser("bound", help="predicted bound and extremal graphs")
    theorem_args(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="exhaustively check one theorem case")
    theorem_args(p)
    p.add_argument("--input", help="graph6 file, or - for standard input (default: built-in enumeration)")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream connected graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="verify every in-range case over a range of orders")
    p.add_argument("--theorems", default="all", help="comma-separated ids or 'all'")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--csv", help="write a CSV summary to this path")
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"resclose: error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"resclose: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
