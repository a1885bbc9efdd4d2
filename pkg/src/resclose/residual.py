"""Link and vertex residual closeness."""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import ZERO, Dyadic
from .graph import Edge, Graph, GraphError, adjacency_closeness, closeness, delete_vertex


@dataclass(frozen=True)
class ResidualResult:
    value: Dyadic
    critical_edges: tuple[Edge, ...]


def edge_deletion_closeness(g: Graph) -> dict[Edge, Dyadic]:
    """C(G - e) for every edge e."""
    adj = list(g.adj)
    out = {}
    for u, v in g.edges():
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        out[(u, v)] = adjacency_closeness(adj)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
    return out


def link_residual_closeness(g: Graph) -> ResidualResult:
    """R^L(G) = min over edges of C(G - e), with the edges attaining it.

    Graphs without edges get 0 and no critical edges.
    """
    values = edge_deletion_closeness(g)
    if not values:
        return ResidualResult(ZERO, ())
    best = min(values.values())
    return ResidualResult(best, tuple(e for e, c in values.items() if c == best))


def link_residual_value(g: Graph) -> Dyadic:
    """Just the minimum; avoids building the critical-edge tuple."""
    adj = list(g.adj)
    best = None
    for u, nb in enumerate(g.adj):
        w = nb >> (u + 1)
        v = u + 1
        while w:
            if w & 1:
                adj[u] ^= 1 << v
                adj[v] ^= 1 << u
                c = adjacency_closeness(adj)
                adj[u] ^= 1 << v
                adj[v] ^= 1 << u
                if best is None or c < best:
                    best = c
            w >>= 1
            v += 1
    return ZERO if best is None else best


def vertex_residual_closeness(g: Graph) -> Dyadic:
    """R(G) = min over vertices of C(G - v); needs at least two vertices."""
    if g.order < 2:
        raise GraphError("vertex residual closeness needs a nontrivial graph")
    return min(closeness(delete_vertex(g, v)) for v in range(g.order))
