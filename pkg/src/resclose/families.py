"""Constructors for the named extremal families and the two path rewirings."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import (
    MAX_ORDER,
    Graph,
    GraphError,
    complete_graph,
    from_edges,
    path_graph,
    star_graph,
)
from .invariants import bridges


class FamilyError(ValueError):
    """Parameters outside a family's stated range, or an invalid rewiring input."""


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise FamilyError(f"order {n} exceeds {MAX_ORDER}")
    if n < 1:
        raise FamilyError("order must be positive")


def _clique_edges(vertices: Sequence[int]):
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            yield u, v


def clique_join(n0: int, parts: Sequence[int]) -> Graph:
    """K_{n0} v (K_{n1} u ... u K_{nt}); ``n0 = 0`` gives the bare union.

    Vertices 0..n0-1 are universal; parts follow in non-increasing size order.
    """
    if n0 < 0 or not parts or any(p < 1 for p in parts):
        raise FamilyError("clique_join needs n0 >= 0 and a nonempty list of positive parts")
    parts = sorted(parts, reverse=True)
    n = n0 + sum(parts)
    _check_order(n)
    edges = list(_clique_edges(range(n0)))
    start = n0
    for p in parts:
        block = range(start, start + p)
        edges.extend(_clique_edges(block))
        edges.extend((u, v) for u in range(n0) for v in block)
        start += p
    return from_edges(n, edges)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise FamilyError("complete_multipartite needs positive part sizes")
    parts = sorted(parts, reverse=True)
    n = sum(parts)
    _check_order(n)
    owner = []
    for i, p in enumerate(parts):
        owner.extend([i] * p)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]]
    return from_edges(n, edges)


def balanced_parts(n: int, k: int) -> list[int]:
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def cnk(n: int, k: int) -> Graph:
    """C_{n,k}: K_{n-k} with k pendant edges at vertex 0."""
    if not 1 <= k <= n - 3:
        raise FamilyError(f"cnk needs 1 <= k <= n-3, got n={n}, k={k}")
    _check_order(n)
    m = n - k
    edges = list(_clique_edges(range(m)))
    edges.extend((0, m + i) for i in range(k))
    return from_edges(n, edges)


def cnk_prime(n: int) -> Graph:
    """C'_{n,2}: K_{n-2} with one pendant edge at each of vertices 0 and 1."""
    if n < 5:
        raise FamilyError(f"cnk_prime needs n >= 5, got {n}")
    _check_order(n)
    m = n - 2
    edges = list(_clique_edges(range(m)))
    edges += [(0, m), (1, m + 1)]
    return from_edges(n, edges)


def k_pendant_paths(lengths: Sequence[int]) -> Graph:
    """K^{a_1,...,a_r}: K_r with a pendant path of length a_i at clique vertex i."""
    r = len(lengths)
    if r < 3 or any(a < 0 for a in lengths):
        raise FamilyError("k_pendant_paths needs at least 3 non-negative lengths")
    lengths = sorted(lengths, reverse=True)
    n = r + sum(lengths)
    _check_order(n)
    edges = list(_clique_edges(range(r)))
    nxt = r
    for i, a in enumerate(lengths):
        prev = i
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edges(n, edges)


def pk_lengths(n: int, k: int) -> list[int]:
    if not 2 <= k <= n - 3:
        raise FamilyError(f"pk needs 2 <= k <= n-3, got n={n}, k={k}")
    return balanced_parts(k, n - k)


def pk(n: int, k: int) -> Graph:
    """PK_{n,k}: clique K_{n-k} with balanced pendant paths of total length k."""
    return k_pendant_paths(pk_lengths(n, k))


def h_graph(b1: int, b2: int) -> Graph:
    """H_n(b1, b2): cliques of sizes b1, b2 sharing vertex 0, a pendant edge at every other clique vertex."""
    if not 3 <= b1 <= b2:
        raise FamilyError(f"h_graph needs 3 <= b1 <= b2, got {b1}, {b2}")
    n = 2 * (b1 + b2) - 3
    _check_order(n)
    first = [0] + list(range(1, b1))
    second = [0] + list(range(b1, b1 + b2 - 1))
    edges = list(_clique_edges(first)) + list(_clique_edges(second))
    nxt = b1 + b2 - 1
    for v in range(1, b1 + b2 - 1):
        edges.append((v, nxt))
        nxt += 1
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# rewirings
# ---------------------------------------------------------------------------

def _check_path_edges(g: Graph, path: Sequence[int]) -> None:
    if len(set(path)) != len(path):
        raise FamilyError("path repeats a vertex")
    for v in path:
        if not 0 <= v < g.order:
            raise FamilyError(f"vertex {v} out of range")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise FamilyError(f"({a}, {b}) is not an edge")


def is_pendant_path(g: Graph, path: Sequence[int]) -> bool:
    try:
        _check_path_edges(g, path)
    except FamilyError:
        return False
    if len(path) < 2:
        return False
    deg = g.degrees()
    return deg[path[0]] >= 3 and deg[path[-1]] == 1 and all(deg[v] == 2 for v in path[1:-1])


def is_internal_path(g: Graph, path: Sequence[int]) -> bool:
    """Ends of degree >= 3, interior of degree 2, and every path edge a bridge."""
    try:
        _check_path_edges(g, path)
    except FamilyError:
        return False
    if len(path) < 2:
        return False
    deg = g.degrees()
    if deg[path[0]] < 3 or deg[path[-1]] < 3 or any(deg[v] != 2 for v in path[1:-1]):
        return False
    cut = set(bridges(g))
    return all((min(a, b), max(a, b)) in cut for a, b in zip(path, path[1:]))


def rewire_internal_path(g: Graph, path: Sequence[int]) -> Graph:
    """Move every neighbour of u_t except u_{t-1} over to u_0."""
    if not is_internal_path(g, path):
        raise FamilyError(f"{list(path)} is not an internal path of cut edges")
    u0, ut, prev = path[0], path[-1], path[-2]
    moved = g.adj[ut] & ~(1 << prev)
    adj = list(g.adj)
    adj[ut] &= ~moved
    adj[u0] |= moved
    for w in range(g.order):
        if moved >> w & 1:
            adj[w] = (adj[w] & ~(1 << ut)) | (1 << u0)
    return Graph(g.order, adj)


def rewire_pendant_path_to_star(g: Graph, path: Sequence[int]) -> Graph:
    """Turn the pendant path u_0 u_1 ... u_t into t pendant edges at u_0."""
    if len(path) < 3 or not is_pendant_path(g, path):
        raise FamilyError(f"{list(path)} is not a pendant path of length >= 2")
    adj = list(g.adj)
    u0 = path[0]
    for i in range(2, len(path)):
        a, b = path[i - 1], path[i]
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)
        adj[u0] |= 1 << b
        adj[b] |= 1 << u0
    return Graph(g.order, adj)


# ---------------------------------------------------------------------------
# named family specs
# ---------------------------------------------------------------------------

class FamilyKind(str, enum.Enum):
    CLIQUE_JOIN = "clique_join"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    STAR = "star"
    PATH = "path"
    COMPLETE = "complete"
    CNK = "cnk"
    CNK_PRIME = "cnk_prime"
    K_PENDANT_PATHS = "k_pendant_paths"
    PK = "pk"
    H_GRAPH = "h_graph"


def _nonincreasing(xs):
    return tuple(sorted(xs, reverse=True))


@dataclass(frozen=True)
class FamilySpec:
    """A family member, e.g. ``clique_join:1,2,3`` is K_1 v (K_2 u K_3)."""

    kind: FamilyKind
    params: tuple[int, ...]

    def __post_init__(self):
        kind = FamilyKind(self.kind)
        params = tuple(int(p) for p in self.params)
        # parameter lists are canonicalised so equal members compare equal
        if kind is FamilyKind.CLIQUE_JOIN and params:
            params = (params[0],) + _nonincreasing(params[1:])
        elif kind in (FamilyKind.COMPLETE_MULTIPARTITE, FamilyKind.K_PENDANT_PATHS):
            params = _nonincreasing(params)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", params)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        kind, _, rest = text.partition(":")
        try:
            fk = FamilyKind(kind.strip().lower())
        except ValueError:
            raise FamilyError(f"unknown family {kind!r}") from None
        try:
            params = tuple(int(x) for x in rest.split(",") if x.strip())
        except ValueError:
            raise FamilyError(f"bad family parameters in {text!r}") from None
        return cls(fk, params)

    def __str__(self):
        return f"{self.kind.value}:{','.join(map(str, self.params))}"

    def build(self) -> Graph:
        p = self.params
        k = self.kind
        try:
            if k is FamilyKind.CLIQUE_JOIN:
                if len(p) < 2:
                    raise FamilyError("clique_join needs n0 and at least one part")
                return clique_join(p[0], p[1:])
            if k is FamilyKind.COMPLETE_MULTIPARTITE:
                return complete_multipartite(p)
            if k is FamilyKind.K_PENDANT_PATHS:
                return k_pendant_paths(p)
            arity = {
                FamilyKind.STAR: 1,
                FamilyKind.PATH: 1,
                FamilyKind.COMPLETE: 1,
                FamilyKind.CNK: 2,
                FamilyKind.CNK_PRIME: 1,
                FamilyKind.PK: 2,
                FamilyKind.H_GRAPH: 2,
            }[k]
            if len(p) != arity:
                raise FamilyError(f"{k.value} takes {arity} parameter(s), got {len(p)}")
            if k in (FamilyKind.STAR, FamilyKind.PATH, FamilyKind.COMPLETE):
                n = p[0]
                _check_order(n)
                if k is FamilyKind.STAR:
                    if n < 2:
                        raise FamilyError("star needs n >= 2")
                    return star_graph(n)
                return path_graph(n) if k is FamilyKind.PATH else complete_graph(n)
            if k is FamilyKind.CNK:
                return cnk(*p)
            if k is FamilyKind.CNK_PRIME:
                return cnk_prime(*p)
            if k is FamilyKind.PK:
                return pk(*p)
            return h_graph(*p)
        except GraphError as exc:
            raise FamilyError(str(exc)) from exc
