"""Closed-form link residual closeness values and extremal bounds.

Everything is computed with exact rationals and returned as ``Dyadic``.
``bound`` gives, for each extremal theorem, the maximum R^L over its graph
class together with the family members predicted to attain it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Sequence

from .dyadic import Dyadic
from .families import FamilyKind, FamilySpec, balanced_parts, pk_lengths


class FormulaError(ValueError):
    """Arguments outside a formula's or theorem's stated range."""


def _d(x) -> Dyadic:
    return Dyadic.from_fraction(x)


def lemma_clique_join_value(n0: int, parts: Sequence[int]) -> Dyadic:
    """R^L(K_{n0} v (K_{n1} u ... u K_{nt})) for n0 >= 1 and t >= 2."""
    if n0 < 1:
        raise FormulaError("n0 must be at least 1")
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise FormulaError("need at least two positive parts")
    parts = sorted(parts)
    n = n0 + sum(parts)
    sq = sum(p * p for p in parts)
    if n0 == 1:
        if parts[0] == 1:
            val = F(sq - 1, 4) + F(n * n, 4) - F(n, 2)
        else:
            val = F(sq, 4) + F(n * n, 4) - F(n, 4) + F(parts[0], 4) - F(1, 2)
    else:
        val = F(sq, 4) + F(n * n, 4) + F((n0 - 1) * n, 2) - F(n0 * n0, 4) - F(1, 2)
    return _d(val)


def eq_mm_value(lengths: Sequence[int]) -> Dyadic:
    """R^L(K^{a_1,...,a_r}) from the pendant-path formula (lengths sorted descending)."""
    a = sorted(lengths, reverse=True)
    if len(a) < 3 or a[-1] < 0:
        raise FormulaError("need at least three non-negative path lengths")
    s = sum(a)
    if s < 2:
        raise FormulaError("total path length must be at least 2")
    half = [F(1, 2**x) for x in a]
    val = 2 * s - 4 + 4 * half[0] + sum(half[1:])
    rest = [2 - h for h in half[1:]]
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            val += rest[i] * rest[j]
    return _d(val)


def complete_value(n: int) -> Dyadic:
    """R^L(K_n) = (n^2 - n - 1)/2 for n >= 3; K_2 gives 0."""
    if n < 2:
        raise FormulaError("K_n needs n >= 2")
    if n == 2:
        return Dyadic(0)
    return _d(F(n * n - n - 1, 2))


def star_value(n: int) -> Dyadic:
    """R^L(S_n) = (n-2)(n+1)/4."""
    if n < 2:
        raise FormulaError("S_n needs n >= 2")
    return _d(F((n - 2) * (n + 1), 4))


def cut_vertex_display_value(n: int, k: int) -> Dyadic:
    """The closed forms printed for the cut-vertex bound, evaluated literally.

    Kept for comparison only; ``bound`` uses the pendant-path formula on PK_{n,k}.
    """
    if not 2 <= k <= n - 3:
        raise FormulaError("need 2 <= k <= n-3")
    m = n - k
    q, r = divmod(k, m)
    p = F(1, 2**q)
    if r == 0:
        val = (2 * (n * n + k * k - 2 * n * k - 3 * n + 4 * k)
               - p * (2 * n * n + 2 * k * k - 4 * n * k - 7 * n + 7 * k - 1)
               + p * p / 2 * (n * n + k * k - 2 * n * k - 3 * n + 3 * k + 2))
    else:
        val = (m * (2 * m - 6) + 2 * k
               - p * (m * (2 * m - r - 6) + F(5 * r + 1, 2))
               + p * p / 4 * (2 * (m - 2) * (m - r) + F(r * r - 3 * r + 2, 2)))
    return _d(val)


def cut_vertex_intermediate_value(n: int, k: int) -> Dyadic:
    """The two intermediate expressions for R^L(PK_{n,k}) stated before the closed forms."""
    if not 2 <= k <= n - 3:
        raise FormulaError("need 2 <= k <= n-3")
    m = n - k
    q, r = divmod(k, m)
    p = F(1, 2**q)
    if r == 0:
        val = 2 * k - 4 + 4 * p + (m - 1) * p + F((m - 1) * (m - 2), 2) * (2 - p) ** 2
    else:
        p1 = p / 2
        val = (2 * k - 4 + 2 * p + (r - 1) * p1 + (m - r) * p
               + F((r - 1) * (r - 2), 2) * (2 - p1) ** 2
               + F((m - r) * (m - r - 1), 2) * (2 - p) ** 2
               + (r - 1) * (m - r) * (2 - p1) * (2 - p))
    return _d(val)


# ---------------------------------------------------------------------------
# matching-number candidates
# ---------------------------------------------------------------------------

def matching_join_value(n: int, beta: int) -> Dyadic:
    """R^L(K_beta v complement(K_{n-beta}))."""
    return _d(F(n * n, 4) - F(n, 4) - F(beta * beta, 4) + F(n * beta, 2) - F(beta, 4) - F(1, 2))


def matching_two_value(n: int, beta: int, printed: bool = False) -> Dyadic:
    """R^L(K_2 v ((n-2beta+1)K_1 u K_{2beta-3})).

    The derivation gives constant +1; ``printed=True`` uses the +1/2 shown in
    the theorem statement instead.
    """
    const = F(1, 2) if printed else F(1)
    return _d(F(n * n, 4) + F(3 * n, 4) + beta * beta - F(7 * beta, 2) + const)


def matching_clique_value(beta: int) -> Dyadic:
    """R^L(K_{2beta+1} u isolated vertices) = 2beta^2 + beta - 1/2."""
    return _d(2 * beta * beta + beta - F(1, 2))


def printed_matching_bound(n: int, beta: int, connected: bool = False) -> Dyadic:
    """The matching bound exactly as printed, branch by branch."""
    if not 2 <= beta <= n // 2 - 1:
        raise FormulaError("need 2 <= beta <= floor(n/2) - 1")
    five, lim = 5 * beta, 2 * n + 3
    if not connected and 2 * beta == n - 2:
        return matching_clique_value(beta)
    if five <= lim:
        return matching_join_value(n, beta)
    return matching_two_value(n, beta, printed=True)


# ---------------------------------------------------------------------------
# theorem cases
# ---------------------------------------------------------------------------

class TheoremId(str, enum.Enum):
    CONNECTIVITY = "connectivity"
    CONNECTIVITY_AT_MOST = "connectivity_at_most"
    EDGE_CONNECTIVITY_AT_MOST = "edge_connectivity_at_most"
    MIN_DEGREE_AT_MOST = "min_degree_at_most"
    BIPARTITE = "bipartite"
    BIPARTITENESS = "bipartiteness"
    INDEPENDENCE = "independence"
    MATCHING = "matching"
    MATCHING_CONNECTED = "matching_connected"
    CHROMATIC = "chromatic"
    CUT_EDGES = "cut_edges"
    PENDANT_EDGES = "pendant_edges"
    CUT_VERTICES = "cut_vertices"
    TREE = "tree"
    ONE_CUT_VERTEX = "one_cut_vertex"

    @classmethod
    def parse(cls, text: str) -> TheoremId:
        try:
            return cls(text.strip().lower().replace("-", "_"))
        except ValueError:
            raise FormulaError(f"unknown theorem id {text!r}") from None


# theorems whose parameter is ignored
PARAMETERLESS = frozenset({TheoremId.BIPARTITE, TheoremId.TREE, TheoremId.ONE_CUT_VERTEX})


@dataclass(frozen=True)
class TheoremCase:
    id: TheoremId
    n: int
    param: int = 0

    def __post_init__(self):
        tid = TheoremId(self.id)
        object.__setattr__(self, "id", tid)
        if tid in PARAMETERLESS:
            object.__setattr__(self, "param", 0)

    def as_dict(self) -> dict:
        return {"id": self.id.value, "n": self.n, "param": self.param}


@dataclass(frozen=True)
class BoundResult:
    bound: Dyadic
    extremal: tuple[FamilySpec, ...]
    notes: str = field(default="")


def param_range(tid: TheoremId, n: int) -> range:
    """In-range parameter values; a single dummy 0 for parameterless theorems."""
    tid = TheoremId(tid)
    if tid is TheoremId.CONNECTIVITY:
        return range(1, n - 1) if n >= 3 else range(0)
    if tid is TheoremId.CONNECTIVITY_AT_MOST:
        return range(1, n - 1) if n >= 5 else range(0)
    if tid in (TheoremId.EDGE_CONNECTIVITY_AT_MOST, TheoremId.MIN_DEGREE_AT_MOST, TheoremId.BIPARTITENESS):
        return range(1, n - 1) if n >= 3 else range(0)
    if tid is TheoremId.BIPARTITE:
        return range(0, 1) if n >= 4 else range(0)
    if tid is TheoremId.INDEPENDENCE:
        return range(2, n)
    if tid in (TheoremId.MATCHING, TheoremId.MATCHING_CONNECTED):
        return range(2, n // 2)
    if tid is TheoremId.CHROMATIC:
        if n < 3:
            return range(0)
        return range(2 if n >= 4 else 3, n + 1)
    if tid in (TheoremId.CUT_EDGES, TheoremId.PENDANT_EDGES):
        return range(1, n - 2)
    if tid is TheoremId.CUT_VERTICES:
        return range(2, n - 2)
    if tid is TheoremId.TREE:
        return range(0, 1) if n >= 2 else range(0)
    if tid is TheoremId.ONE_CUT_VERTEX:
        return range(0, 1) if n >= 4 else range(0)
    raise FormulaError(f"unknown theorem {tid}")


def cases(tid: TheoremId, n: int) -> list[TheoremCase]:
    return [TheoremCase(tid, n, p) for p in param_range(tid, n)]


def _cj(n0: int, *parts: int) -> FamilySpec:
    return FamilySpec(FamilyKind.CLIQUE_JOIN, (n0, *parts))


def _cmp(*parts: int) -> FamilySpec:
    return FamilySpec(FamilyKind.COMPLETE_MULTIPARTITE, parts)


def _dedupe(specs) -> tuple[FamilySpec, ...]:
    out = []
    for s in specs:
        if s not in out:
            out.append(s)
    return tuple(out)


def _cut_vertex_one(n: int) -> BoundResult:
    # one cut vertex / connectivity one
    low = F(n * n - 3 * n + 2, 2)
    if n <= 4:
        return BoundResult(_d(low), (_cj(1, 1, n - 2),), "n <= 4: K_1 v (K_1 u K_{n-2})")
    high = F(2 * n * n - 7 * n + 13, 4)
    if n <= 8:
        return BoundResult(_d(high), (_cj(1, 2, n - 3),), "5 <= n <= 8: K_1 v (K_2 u K_{n-3})")
    if n == 9:
        return BoundResult(_d(low), (_cj(1, 1, n - 2), _cj(1, 2, n - 3)), "n = 9: both branches tie")
    return BoundResult(_d(low), (_cj(1, 1, n - 2),), "n >= 10: K_1 v (K_1 u K_{n-2})")


def _bipartite_value(n: int) -> F:
    return F(n * n - n - 3, 4) + F(n * n // 4, 2)


def bound(case: TheoremCase) -> BoundResult:
    tid, n, k = case.id, case.n, case.param
    if k not in param_range(tid, n):
        raise FormulaError(f"{tid.value}: parameter {k} out of range for n={n}")

    if tid in (TheoremId.CONNECTIVITY, TheoremId.CONNECTIVITY_AT_MOST):
        if k == 1:
            return _cut_vertex_one(n)
        return BoundResult(_d(F(n * n - 2 * n + k, 2)), (_cj(k, 1, n - k - 1),), "k >= 2: K_k v (K_1 u K_{n-k-1})")

    if tid in (TheoremId.EDGE_CONNECTIVITY_AT_MOST, TheoremId.MIN_DEGREE_AT_MOST):
        val = F(n * n - 3 * n + 2, 2) if k == 1 else F(n * n - 2 * n + k, 2)
        return BoundResult(_d(val), (_cj(k, 1, n - k - 1),), "K_r v (K_1 u K_{n-r-1})")

    if tid is TheoremId.ONE_CUT_VERTEX:
        return _cut_vertex_one(n)

    if tid is TheoremId.BIPARTITE:
        return BoundResult(_d(_bipartite_value(n)), (_cmp(n // 2, n - n // 2),), "balanced complete bipartite")

    if tid is TheoremId.BIPARTITENESS:
        val = F(3 * n * n, 8) - F(n, 4) + F(n * k, 4) - F(k * k, 8) - F(k, 4)
        val -= F(5, 8) if (n - k) % 2 else F(1, 2)
        a = (n - k) // 2
        return BoundResult(_d(val), (_cmp(*([1] * k), a, n - k - a),), "K_k v balanced K_{a,b}")

    if tid is TheoremId.INDEPENDENCE:
        if k == n - 1:
            val = F(n * n - n - 2, 4)
        else:
            val = F(n * n - n - 1, 2) - F(k * k - k, 4)
        return BoundResult(_d(val), (_cj(n - k, *([1] * k)),), "K_{n-alpha} v complement(K_alpha)")

    if tid in (TheoremId.MATCHING, TheoremId.MATCHING_CONNECTED):
        beta = k
        cands = [
            (matching_join_value(n, beta), _cj(beta, *([1] * (n - beta)))),
            (matching_two_value(n, beta), _cj(2, *([1] * (n - 2 * beta + 1)), 2 * beta - 3)),
        ]
        if tid is TheoremId.MATCHING:
            cands.append((matching_clique_value(beta), _cj(0, 2 * beta + 1, *([1] * (n - 2 * beta - 1)))))
        best = max(v for v, _ in cands)
        ext = _dedupe(s for v, s in cands if v == best)
        notes = f"5*beta={5 * beta} vs 2n+3={2 * n + 3}"
        printed = printed_matching_bound(n, beta, connected=tid is TheoremId.MATCHING_CONNECTED)
        if printed != best:
            notes += f"; printed statement gives {printed.fraction_str()}"
        return BoundResult(best, ext, notes)

    if tid is TheoremId.CHROMATIC:
        if k == 2:
            return BoundResult(_d(_bipartite_value(n)), (_cmp(n // 2, n - n // 2),), "k = 2: bipartite case")
        q, r = divmod(n, k)
        val = F(n * n - 1, 2) - F(n + r * (q + 1) ** 2 + (k - r) * q * q, 4)
        return BoundResult(_d(val), (_cmp(*balanced_parts(n, k)),), "balanced complete k-partite")

    if tid in (TheoremId.CUT_EDGES, TheoremId.PENDANT_EDGES):
        val = F(n * n - n * k, 2) - n + F(k * k + 3 * k, 4)
        ext = [FamilySpec(FamilyKind.CNK, (n, k))]
        if k == 2:
            ext.append(FamilySpec(FamilyKind.CNK_PRIME, (n,)))
        return BoundResult(_d(val), tuple(ext), "C_{n,k}" + (" and C'_{n,2}" if k == 2 else ""))

    if tid is TheoremId.CUT_VERTICES:
        pk_spec = FamilySpec(FamilyKind.PK, (n, k))
        if (n, k) == (9, 5):
            return BoundResult(Dyadic(16), (FamilySpec(FamilyKind.H_GRAPH, (3, 3)),), "exceptional (9,5): H_9(3,3)")
        val = eq_mm_value(pk_lengths(n, k))
        if (n, k) == (11, 6):
            return BoundResult(val, (pk_spec, FamilySpec(FamilyKind.H_GRAPH, (3, 4))), "exceptional (11,6): tie")
        return BoundResult(val, (pk_spec,), "PK_{n,k} via pendant-path formula")

    if tid is TheoremId.TREE:
        return BoundResult(star_value(n), (FamilySpec(FamilyKind.STAR, (n,)),), "star")

    raise FormulaError(f"unhandled theorem {tid}")
