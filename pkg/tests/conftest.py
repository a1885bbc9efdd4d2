import os
import random
from fractions import Fraction

import networkx as nx
import pytest

from resclose.graph import Graph, from_edges

ACCEPTANCE_LINES: list[str] = []

RUN_N9 = os.environ.get("RESCLOSE_RUN_N9") == "1"


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def oracle_closeness(h: nx.Graph) -> Fraction:
    """Closeness from networkx shortest paths, in plain Fractions."""
    total = Fraction(0)
    for u, dist in nx.all_pairs_shortest_path_length(h):
        for v, d in dist.items():
            if u != v:
                total += Fraction(1, 2**d)
    return total


def oracle_link_residual(h: nx.Graph) -> Fraction:
    if h.number_of_edges() == 0:
        return Fraction(0)
    best = None
    for e in list(h.edges()):
        h.remove_edge(*e)
        c = oracle_closeness(h)
        h.add_edge(*e)
        if best is None or c < best:
            best = c
    return best


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def atlas(n_max: int = 7):
    """Every graph on 1..n_max vertices, one per isomorphism class (networkx atlas)."""
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= n_max:
            yield h


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
