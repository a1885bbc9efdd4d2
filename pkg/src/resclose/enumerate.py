"""Isomorph-free generation of connected graphs by canonical augmentation.

A connected graph on n vertices always has a non-cut vertex, so it arises
from a connected graph on n-1 vertices by adding one vertex joined to a
nonempty subset.  A child is kept only when its canonical deletion vertex
(the non-cut vertex with the largest canonical label) leaves a graph
isomorphic to the parent it was built from, which makes that parent unique.
Children of one parent that coincide are removed with a per-parent set.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from .canon import canonical_form, canonical_perm
from .graph import Graph, complete_graph, disjoint_union, mask_connected

DEFAULT_MAX_N = 9
MAX_N_ENV = "RESCLOSE_MAX_N"


class EnumerationError(ValueError):
    pass


def generator_cap() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise EnumerationError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from exc


def _check_n(n: int) -> None:
    cap = generator_cap()
    if not 1 <= n <= cap:
        raise EnumerationError(
            f"built-in generator supports 1 <= n <= {cap}; use a graph6 stream for larger orders"
        )


def _children(parent: Graph, parent_canon: Graph) -> Iterator[tuple[Graph, Graph]]:
    m = parent.order
    n = m + 1
    full = (1 << n) - 1
    padj = parent.adj
    seen = set()
    for subset in range(1, 1 << m):
        adj = list(padj)
        for v in range(m):
            if subset >> v & 1:
                adj[v] |= 1 << m
        adj.append(subset)
        perm = canonical_perm(Graph._trusted(n, tuple(adj)))
        label = [0] * n
        for i, v in enumerate(perm):
            label[v] = i
        cadj = [0] * n
        for v in range(n):
            nb = adj[v]
            c = 0
            while nb:
                low = nb & -nb
                c |= 1 << label[low.bit_length() - 1]
                nb ^= low
            cadj[label[v]] = c
        canon = Graph._trusted(n, tuple(cadj))
        if canon in seen:
            continue
        # canonical deletion vertex
        wstar = -1
        for v in reversed(perm):
            if mask_connected(adj, full & ~(1 << v)):
                wstar = v
                break
        if wstar != m:
            if adj[wstar].bit_count() != subset.bit_count():
                continue
            keep = [v for v in range(n) if v != wstar]
            reduced = _induced(adj, keep)
            if canonical_form(reduced) != parent_canon:
                continue
        seen.add(canon)
        yield Graph._trusted(n, tuple(adj)), canon


def _induced(adj, keep):
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        nb = 0
        for w, i in index.items():
            if adj[v] >> w & 1:
                nb |= 1 << i
        out.append(nb)
    return Graph._trusted(len(keep), tuple(out))


def _connected_with_canon(n: int) -> Iterator[tuple[Graph, Graph]]:
    if n == 1:
        k1 = complete_graph(1)
        yield k1, k1
        return
    for parent, pcanon in _connected_canon_list(n - 1):
        yield from _children(parent, pcanon)


@lru_cache(maxsize=None)
def _connected_canon_list(n: int) -> tuple[tuple[Graph, Graph], ...]:
    return tuple(_connected_with_canon(n))


def enumerate_connected(n: int, canonical: bool = True) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on ``n`` vertices.

    With ``canonical`` the yielded graphs are in canonical labelling.
    Order is deterministic.
    """
    _check_n(n)
    idx = 1 if canonical else 0
    for pair in _connected_with_canon(n):
        yield pair[idx]


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Cached, canonically labelled list of connected graphs on ``n`` vertices."""
    _check_n(n)
    return tuple(c for _, c in _connected_canon_list(n))


def _partitions(n: int, largest: int):
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of all graphs on ``n`` vertices.

    Built as multisets of connected components, so classes never repeat.
    """
    _check_n(n)
    for sizes in _partitions(n, n):
        mult: dict[int, int] = {}
        for s in sizes:
            mult[s] = mult.get(s, 0) + 1
        yield from _component_products(sorted(mult.items(), reverse=True))


def _component_products(groups):
    if not groups:
        yield None
        return
    (size, count), rest = groups[0], groups[1:]
    pool = connected_graphs(size)
    for choice in combinations_with_replacement(pool, count):
        for tail in _component_products(rest):
            g = tail
            for comp in choice:
                g = comp if g is None else disjoint_union(comp, g)
            yield g


def enumerate_disconnected(n: int) -> Iterator[Graph]:
    """Isomorphism classes of disconnected graphs on ``n`` vertices."""
    _check_n(n)
    for sizes in _partitions(n, n):
        if len(sizes) < 2:
            continue
        mult: dict[int, int] = {}
        for s in sizes:
            mult[s] = mult.get(s, 0) + 1
        yield from _component_products(sorted(mult.items(), reverse=True))
