"""Exact link residual closeness of graphs and exhaustive checks of its extremal bounds."""

from .dyadic import Dyadic
from .graph import (
    Graph,
    bfs_distances,
    closeness,
    from_edges,
    graph6_decode,
    graph6_encode,
    is_connected,
    vertex_closeness,
)
from .residual import ResidualResult, link_residual_closeness, vertex_residual_closeness

__version__ = "0.1.0"

__all__ = [
    "Dyadic",
    "Graph",
    "ResidualResult",
    "bfs_distances",
    "closeness",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "link_residual_closeness",
    "vertex_closeness",
    "vertex_residual_closeness",
]
