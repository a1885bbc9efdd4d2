"""Exact graph parameters used to define the extremal classes.

All exponential searches work on vertex bitmasks and refuse graphs above
``search_cap`` vertices (default 16).
"""

from __future__ import annotations

import enum
from itertools import combinations

from .graph import Graph, iter_bits, mask_connected

DEFAULT_SEARCH_CAP = 16


class ParameterKind(str, enum.Enum):
    CONNECTIVITY = "connectivity"
    EDGE_CONNECTIVITY = "edge_connectivity"
    MIN_DEGREE = "min_degree"
    INDEPENDENCE = "independence"
    MATCHING = "matching"
    CHROMATIC = "chromatic"
    BIPARTITENESS = "bipartiteness"
    CUT_EDGES = "cut_edges"
    CUT_VERTICES = "cut_vertices"
    PENDANT_EDGES = "pendant_edges"


class InvariantCapError(ValueError):
    """Graph too large for an exact exponential search."""


def _cap(g: Graph, cap: int | None) -> None:
    limit = DEFAULT_SEARCH_CAP if cap is None else cap
    if g.order > limit:
        raise InvariantCapError(f"order {g.order} exceeds exact-search cap {limit}")


def _full(g: Graph) -> int:
    return (1 << g.order) - 1


def _is_complete(g: Graph) -> bool:
    return g.size == g.order * (g.order - 1) // 2


def connectivity(g: Graph, cap: int | None = None) -> int:
    n = g.order
    full = _full(g)
    if n == 1 or not mask_connected(g.adj, full):
        return 0
    if _is_complete(g):
        return n - 1
    _cap(g, cap)
    for k in range(1, n - 1):
        for removed in combinations(range(n), k):
            mask = full
            for v in removed:
                mask &= ~(1 << v)
            if not mask_connected(g.adj, mask):
                return k
    return n - 1


def edge_connectivity(g: Graph, cap: int | None = None) -> int:
    """Minimum edge cut, by scanning every bipartition that contains vertex 0."""
    n = g.order
    full = _full(g)
    if n == 1 or not mask_connected(g.adj, full):
        return 0
    if _is_complete(g):
        return n - 1
    _cap(g, cap)
    adj = g.adj
    best = min(g.degrees())
    rest_bits = n - 1
    for sub in range(0, (1 << rest_bits) - 1):
        side = (sub << 1) | 1
        other = full & ~side
        cut = 0
        for v in iter_bits(side):
            cut += (adj[v] & other).bit_count()
            if cut >= best:
                break
        if cut < best:
            best = cut
    return best


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def independence_number(g: Graph, cap: int | None = None) -> int:
    _cap(g, cap)
    adj = g.adj

    def grow(cand: int, size: int, best: int) -> int:
        if not cand:
            return max(size, best)
        if size + cand.bit_count() <= best:
            return best
        low = cand & -cand
        v = low.bit_length() - 1
        best = grow(cand & ~low & ~adj[v], size + 1, best)
        # if v has no neighbour among candidates, including it is always optimal
        if adj[v] & cand:
            best = grow(cand & ~low, size, best)
        return best

    return grow(_full(g), 0, 0)


def matching_number(g: Graph, cap: int | None = None) -> int:
    """Maximum matching size by memoised DP over vertex subsets."""
    _cap(g, cap)
    adj = g.adj
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        if mask.bit_count() < 2:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask & ~low
        res = best(rest)
        for w in iter_bits(adj[v] & rest):
            cand = 1 + best(rest & ~(1 << w))
            if cand > res:
                res = cand
        memo[mask] = res
        return res

    return best(_full(g))


def _colorable(adj, n: int, k: int) -> bool:
    colors = [-1] * n
    # high-degree vertices first
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = 0
        for w in iter_bits(adj[v]):
            if colors[w] >= 0:
                forbidden |= 1 << colors[w]
        # symmetry: only one new colour class is tried
        for c in range(min(used + 1, k)):
            if not forbidden >> c & 1:
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph, cap: int | None = None) -> int:
    _cap(g, cap)
    if g.size == 0:
        return 1
    for k in range(2, g.order + 1):
        if _colorable(g.adj, g.order, k):
            return k
    return g.order


def mask_bipartite(adj, mask: int) -> bool:
    color = {}
    rest = mask
    while rest:
        low = rest & -rest
        start = low.bit_length() - 1
        color[start] = 0
        side = [low, 0]
        frontier = low
        seen = low
        parity = 0
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= mask
            parity ^= 1
            if nxt & side[parity ^ 1]:
                return False
            nxt &= ~seen
            side[parity] |= nxt
            seen |= nxt
            frontier = nxt
        rest &= ~seen
    return True


def bipartiteness(g: Graph, cap: int | None = None) -> int:
    """Odd cycle transversal number."""
    _cap(g, cap)
    n = g.order
    full = _full(g)
    for k in range(0, n + 1):
        for removed in combinations(range(n), k):
            mask = full
            for v in removed:
                mask &= ~(1 << v)
            if mask_bipartite(g.adj, mask):
                return k
    return n


def _lowlink(g: Graph):
    """Bridges and articulation points via iterative DFS."""
    n = g.order
    adj = [list(iter_bits(nb)) for nb in g.adj]
    disc = [-1] * n
    low = [0] * n
    bridges = []
    cut = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append((min(parent, v), max(parent, v)))
                if parent != root and low[v] >= disc[parent]:
                    cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return sorted(bridges), sorted(cut)


def bridges(g: Graph) -> list[tuple[int, int]]:
    return _lowlink(g)[0]


def articulation_points(g: Graph) -> list[int]:
    return _lowlink(g)[1]


def cut_edges(g: Graph) -> int:
    return len(bridges(g))


def cut_vertices(g: Graph) -> int:
    return len(articulation_points(g))


def pendant_edges(g: Graph) -> int:
    deg = g.degrees()
    return sum(1 for u, v in g.edges() if deg[u] == 1 or deg[v] == 1)


_DISPATCH = {
    ParameterKind.CONNECTIVITY: connectivity,
    ParameterKind.EDGE_CONNECTIVITY: edge_connectivity,
    ParameterKind.MIN_DEGREE: min_degree,
    ParameterKind.INDEPENDENCE: independence_number,
    ParameterKind.MATCHING: matching_number,
    ParameterKind.CHROMATIC: chromatic_number,
    ParameterKind.BIPARTITENESS: bipartiteness,
    ParameterKind.CUT_EDGES: cut_edges,
    ParameterKind.CUT_VERTICES: cut_vertices,
    ParameterKind.PENDANT_EDGES: pendant_edges,
}


def parameter(g: Graph, kind: ParameterKind) -> int:
    return _DISPATCH[ParameterKind(kind)](g)


def all_parameters(g: Graph) -> dict[ParameterKind, int]:
    b, c = _lowlink(g)
    out = {k: f(g) for k, f in _DISPATCH.items() if k not in (ParameterKind.CUT_EDGES, ParameterKind.CUT_VERTICES)}
    out[ParameterKind.CUT_EDGES] = len(b)
    out[ParameterKind.CUT_VERTICES] = len(c)
    return {k: out[k] for k in ParameterKind}
