from itertools import combinations, product

import networkx as nx
import pytest

from conftest import atlas, from_nx, random_graph, to_nx
from resclose.graph import complete_graph, empty_graph, path_graph, star_graph
from resclose.families import cnk, complete_multipartite, h_graph
from resclose.invariants import (
    InvariantCapError,
    ParameterKind,
    all_parameters,
    articulation_points,
    bipartiteness,
    bridges,
    chromatic_number,
    connectivity,
    cut_edges,
    cut_vertices,
    edge_connectivity,
    independence_number,
    matching_number,
    min_degree,
    parameter,
    pendant_edges,
)


def brute_chromatic(h):
    n = h.number_of_nodes()
    for k in range(1, n + 1):
        for col in product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in h.edges()):
                return k
    return 0


def brute_bipartiteness(h):
    nodes = list(h.nodes())
    for k in range(len(nodes) + 1):
        for drop in combinations(nodes, k):
            if nx.is_bipartite(h.subgraph(set(nodes) - set(drop))):
                return k


def nx_independence(h):
    comp = nx.complement(h)
    return max(len(c) for c in nx.find_cliques(comp))


def check_against_oracles(h):
    g = from_nx(h)
    connected = nx.is_connected(h)
    assert connectivity(g) == (nx.node_connectivity(h) if connected else 0)
    assert edge_connectivity(g) == (nx.edge_connectivity(h) if connected else 0)
    assert min_degree(g) == min(d for _, d in h.degree())
    assert independence_number(g) == nx_independence(h)
    assert matching_number(g) == len(nx.max_weight_matching(h, maxcardinality=True))
    assert chromatic_number(g) == brute_chromatic(h)
    assert bipartiteness(g) == brute_bipartiteness(h)
    assert sorted(bridges(g)) == sorted(tuple(sorted(e)) for e in nx.bridges(h))
    assert sorted(articulation_points(g)) == sorted(nx.articulation_points(h))
    assert pendant_edges(g) == sum(1 for u, v in h.edges() if h.degree(u) == 1 or h.degree(v) == 1)


def test_atlas_up_to_six():
    for h in atlas(6):
        check_against_oracles(h)


def test_random_seven_and_eight(rng):
    for _ in range(60):
        g = random_graph(rng, rng.choice([7, 8]), rng.uniform(0.2, 0.8))
        check_against_oracles(to_nx(g))


def test_connectivity_conventions():
    assert connectivity(complete_graph(5)) == 4
    assert edge_connectivity(complete_graph(5)) == 4
    assert connectivity(complete_graph(1)) == 0
    assert connectivity(empty_graph(3)) == 0


def test_named_graphs():
    assert bipartiteness(complete_graph(5)) == 3
    assert chromatic_number(complete_multipartite([3, 3, 2])) == 3
    assert cut_edges(path_graph(6)) == 5
    assert cut_vertices(path_graph(6)) == 4
    assert pendant_edges(star_graph(6)) == 5
    assert pendant_edges(complete_graph(2)) == 1
    assert cut_vertices(h_graph(3, 3)) == 5
    assert cut_edges(cnk(8, 3)) == 3


def test_search_cap():
    big = empty_graph(20)
    with pytest.raises(InvariantCapError):
        independence_number(big)
    assert independence_number(big, cap=20) == 20
    # linear-time parameters have no cap
    assert cut_edges(path_graph(40)) == 39


def test_dispatch_order():
    params = all_parameters(path_graph(4))
    assert list(params) == list(ParameterKind)
    for kind, value in params.items():
        assert parameter(path_graph(4), kind) == value
