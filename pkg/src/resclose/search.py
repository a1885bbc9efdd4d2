"""Exhaustive verification of the extremal bounds.

Each graph in a source is analysed once (R^L plus every parameter); the
records are then filtered per theorem case and reduced to a maximum and an
argmax set of canonical graph6 strings.  The reduction is order independent,
so serial and parallel runs give identical reports.
"""

from __future__ import annotations

import enum
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .canon import canonical_graph6, isomorphic
from .dyadic import Dyadic
from .enumerate import enumerate_connected, enumerate_disconnected
from .formulas import PARAMETERLESS, BoundResult, TheoremCase, TheoremId, bound, param_range
from .graph import Graph, graph6_decode, graph6_encode, is_connected
from .invariants import ParameterKind, all_parameters
from .residual import link_residual_value

__all__ = [
    "GraphRecord",
    "Verdict",
    "VerifyReport",
    "analyze",
    "enumerate_connected",
    "isomorphic",
    "sweep",
    "verify",
]

log = logging.getLogger(__name__)

CHUNK = 512

_P = list(ParameterKind)
_IDX = {k: i for i, k in enumerate(_P)}

# theorems stated over connected graphs only
CONNECTED_ONLY = frozenset({
    TheoremId.CONNECTIVITY,
    TheoremId.MATCHING_CONNECTED,
    TheoremId.CUT_EDGES,
    TheoremId.PENDANT_EDGES,
    TheoremId.CUT_VERTICES,
    TheoremId.TREE,
    TheoremId.ONE_CUT_VERTEX,
})


class GraphRecord(NamedTuple):
    graph6: str
    connected: bool
    link_residual: Dyadic
    params: tuple[int, ...]

    def param(self, kind: ParameterKind) -> int:
        return self.params[_IDX[kind]]


def analyze(g: Graph) -> GraphRecord:
    params = all_parameters(g)
    return GraphRecord(
        graph6_encode(g),
        is_connected(g),
        link_residual_value(g),
        tuple(params[k] for k in _P),
    )


def _analyze_chunk(lines: Sequence[str]) -> list[GraphRecord]:
    return [analyze(graph6_decode(s)) for s in lines]


def _chunks(graphs: Iterable[Graph], size: int = CHUNK):
    buf = []
    for g in graphs:
        buf.append(graph6_encode(g))
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def default_jobs() -> int:
    return os.cpu_count() or 1


def analyze_all(graphs: Iterable[Graph], jobs: int = 1) -> list[GraphRecord]:
    """Records in source order; ``jobs > 1`` fans chunks out to worker processes."""
    if jobs <= 1:
        return [analyze(g) for g in graphs]
    out: list[GraphRecord] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_analyze_chunk, _chunks(graphs)):
            out.extend(part)
    return out


_records_cache: dict[tuple[int, bool], tuple[GraphRecord, ...]] = {}


def _records(n: int, connected: bool, jobs: int) -> tuple[GraphRecord, ...]:
    # keyed without jobs: the records do not depend on it
    key = (n, connected)
    if key not in _records_cache:
        log.info("analysing %s graphs on %d vertices", "connected" if connected else "disconnected", n)
        gen = enumerate_connected(n) if connected else enumerate_disconnected(n)
        _records_cache[key] = tuple(analyze_all(gen, jobs))
    return _records_cache[key]


def builtin_records(n: int, connected_only: bool, jobs: int = 1) -> tuple[GraphRecord, ...]:
    recs = _records(n, True, jobs)
    if connected_only:
        return recs
    return recs + _records(n, False, jobs)


def in_class(case: TheoremCase, rec: GraphRecord, n: int) -> bool:
    """Whether a graph belongs to the theorem's class."""
    tid, k = case.id, case.param
    if tid in CONNECTED_ONLY and not rec.connected:
        return False
    P = ParameterKind
    p = rec.param
    if tid is TheoremId.CONNECTIVITY:
        return p(P.CONNECTIVITY) == k
    if tid is TheoremId.CONNECTIVITY_AT_MOST:
        return p(P.CONNECTIVITY) <= k
    if tid is TheoremId.EDGE_CONNECTIVITY_AT_MOST:
        return p(P.EDGE_CONNECTIVITY) <= k
    if tid is TheoremId.MIN_DEGREE_AT_MOST:
        return p(P.MIN_DEGREE) <= k
    if tid is TheoremId.BIPARTITE:
        return p(P.BIPARTITENESS) == 0
    if tid is TheoremId.BIPARTITENESS:
        return p(P.BIPARTITENESS) == k
    if tid is TheoremId.INDEPENDENCE:
        return p(P.INDEPENDENCE) == k
    if tid in (TheoremId.MATCHING, TheoremId.MATCHING_CONNECTED):
        return p(P.MATCHING) == k
    if tid is TheoremId.CHROMATIC:
        return p(P.CHROMATIC) == k
    if tid is TheoremId.CUT_EDGES:
        return p(P.CUT_EDGES) == k
    if tid is TheoremId.PENDANT_EDGES:
        return p(P.PENDANT_EDGES) == k
    if tid is TheoremId.CUT_VERTICES:
        return p(P.CUT_VERTICES) == k
    if tid is TheoremId.TREE:
        return p(P.CUT_EDGES) == n - 1
    if tid is TheoremId.ONE_CUT_VERTEX:
        return p(P.CUT_VERTICES) == 1
    raise ValueError(f"unhandled theorem {tid}")


class Verdict(str, enum.Enum):
    MATCH = "MATCH"
    VALUE_MISMATCH = "VALUE_MISMATCH"
    EXTREMAL_SET_MISMATCH = "EXTREMAL_SET_MISMATCH"
    EMPTY_CLASS = "EMPTY_CLASS"


def _value_json(v: Dyadic | None):
    if v is None:
        return None
    return {"fraction": v.fraction_str(), "decimal": v.decimal_str()}


@dataclass(frozen=True)
class VerifyReport:
    case: TheoremCase
    graphs_checked: int
    class_size: int
    max_value: Dyadic | None
    argmax: tuple[str, ...]
    predicted_bound: Dyadic
    predicted_extremal: tuple[str, ...]
    predicted_families: tuple[str, ...]
    verdict: Verdict
    counterexamples: tuple[str, ...]
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "case": self.case.as_dict(),
            "graphsChecked": self.graphs_checked,
            "classSize": self.class_size,
            "maxValue": _value_json(self.max_value),
            "argmax": list(self.argmax),
            "predictedBound": _value_json(self.predicted_bound),
            "predictedExtremal": list(self.predicted_extremal),
            "predictedFamilies": list(self.predicted_families),
            "verdict": self.verdict.value,
            "counterexamples": list(self.counterexamples),
            "notes": self.notes,
        }

    def csv_row(self) -> list:
        return [
            self.case.id.value,
            self.case.n,
            "" if self.case.id in PARAMETERLESS else self.case.param,
            self.class_size,
            "" if self.max_value is None else self.max_value.fraction_str(),
            self.predicted_bound.fraction_str(),
            self.verdict.value,
        ]


CSV_HEADER = ["case", "n", "param", "class_size", "max", "bound", "verdict"]


def _reduce(case: TheoremCase, records: Iterable[GraphRecord], n: int):
    best = None
    arg: list[str] = []
    size = 0
    total = 0
    for rec in records:
        total += 1
        if not in_class(case, rec, n):
            continue
        size += 1
        v = rec.link_residual
        if best is None or v > best:
            best = v
            arg = [rec.graph6]
        elif v == best:
            arg.append(rec.graph6)
    return total, size, best, arg


def _report(case: TheoremCase, predicted: BoundResult, total, size, best, arg) -> VerifyReport:
    argmax = tuple(sorted({canonical_graph6(graph6_decode(s)) for s in arg}))
    pred = tuple(sorted({canonical_graph6(spec.build()) for spec in predicted.extremal}))
    if size == 0:
        verdict = Verdict.EMPTY_CLASS
    elif best != predicted.bound:
        verdict = Verdict.VALUE_MISMATCH
    elif set(argmax) != set(pred):
        verdict = Verdict.EXTREMAL_SET_MISMATCH
    else:
        verdict = Verdict.MATCH
    extra = [s for s in argmax if s not in pred]
    missing = [s for s in pred if s not in argmax]
    return VerifyReport(
        case=case,
        graphs_checked=total,
        class_size=size,
        max_value=best,
        argmax=argmax,
        predicted_bound=predicted.bound,
        predicted_extremal=pred,
        predicted_families=tuple(str(s) for s in predicted.extremal),
        verdict=verdict,
        counterexamples=tuple(extra + missing) if verdict is not Verdict.MATCH else (),
        notes=predicted.notes,
    )


def verify(case: TheoremCase, source: Iterable[Graph] | None = None, jobs: int = 1) -> VerifyReport:
    """Check one theorem case against every graph of order ``case.n`` in ``source``.

    Without a source the built-in enumeration is used (connected graphs, or
    all graphs for theorems stated over all graphs).
    """
    predicted = bound(case)
    n = case.n
    if source is None:
        records = builtin_records(n, case.id in CONNECTED_ONLY, jobs)
    else:
        graphs = []
        for g in source:
            if g.order != n:
                raise ValueError(f"source graph of order {g.order} does not match n={n}")
            graphs.append(g)
        records = analyze_all(graphs, jobs)
    return _report(case, predicted, *_reduce(case, records, n))


def sweep(
    ids: Iterable[TheoremId],
    ns: Iterable[int],
    jobs: int = 1,
    source_records: dict[int, Sequence[GraphRecord]] | None = None,
) -> list[VerifyReport]:
    """Verify every in-range parameter of each theorem for each order."""
    reports = []
    ids = [TheoremId(t) for t in ids]
    for n in ns:
        for tid in ids:
            for p in param_range(tid, n):
                case = TheoremCase(tid, n, p)
                if source_records is not None:
                    records = source_records[n]
                else:
                    records = builtin_records(n, tid in CONNECTED_ONLY, jobs)
                reports.append(_report(case, bound(case), *_reduce(case, records, n)))
    return reports
