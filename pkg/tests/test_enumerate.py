from collections import Counter

import networkx as nx
import pytest

from conftest import atlas, from_nx, random_graph, to_nx
from resclose.canon import canonical_form, canonical_graph6, isomorphic
from resclose.enumerate import (
    EnumerationError,
    connected_graphs,
    enumerate_connected,
    enumerate_disconnected,
    enumerate_graphs,
)
from resclose.graph import graph6_decode, graph6_encode, is_connected, relabel

CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_canonical_form_is_invariant(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 11), rng.random())
        perm = list(range(g.order))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_canonical_form_separates_atlas():
    # the atlas lists each class once, so canonical forms must be pairwise distinct
    forms = Counter(canonical_graph6(from_nx(h)) for h in atlas(7))
    assert max(forms.values()) == 1


def test_isomorphic_matches_networkx(rng):
    for _ in range(200):
        n = rng.randint(4, 8)
        p = rng.random()
        a, b = random_graph(rng, n, p), random_graph(rng, n, p)
        assert isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_regular_graphs_are_handled():
    # vertex-transitive graphs give refinement nothing to work with
    for h in (nx.petersen_graph(), nx.cycle_graph(12), nx.hypercube_graph(4), nx.circulant_graph(13, [1, 5])):
        g = from_nx(h)
        perm = list(reversed(range(g.order)))
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


@pytest.mark.parametrize("n", sorted(CONNECTED))
def test_connected_counts(n):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == CONNECTED[n]
    assert all(is_connected(g) for g in graphs)
    assert len({canonical_form(g) for g in graphs}) == len(graphs)


@pytest.mark.parametrize("n", sorted(ALL))
def test_all_graph_counts(n):
    assert sum(1 for _ in enumerate_graphs(n)) == ALL[n]
    assert sum(1 for _ in enumerate_disconnected(n)) == ALL[n] - CONNECTED[n]


def test_enumeration_equals_atlas_classes():
    for n in range(1, 8):
        want = {canonical_graph6(from_nx(h)) for h in atlas(7) if h.number_of_nodes() == n}
        got = {canonical_graph6(g) for g in enumerate_graphs(n)}
        assert got == want


def test_deterministic_order():
    assert list(enumerate_connected(6)) == list(enumerate_connected(6))
    assert connected_graphs(6) == tuple(enumerate_connected(6))


def test_graph6_round_trip_n7():
    for g in enumerate_connected(7):
        assert graph6_decode(graph6_encode(g)) == g


def test_cap(monkeypatch):
    with pytest.raises(EnumerationError):
        list(enumerate_connected(10))
    with pytest.raises(EnumerationError):
        list(enumerate_connected(0))
    monkeypatch.setenv("RESCLOSE_MAX_N", "3")
    with pytest.raises(EnumerationError):
        list(enumerate_connected(4))
    monkeypatch.setenv("RESCLOSE_MAX_N", "many")
    with pytest.raises(EnumerationError):
        list(enumerate_connected(3))
