"""Canonical labelling by individualisation-refinement.

The search refines an ordered vertex partition to an equitable one, then
branches on the first non-singleton cell.  Branches are pruned with twin
transpositions and with automorphisms found at earlier leaves that fix the
current branch prefix.  Among the leaves, the labelling with the largest
upper-triangle code wins.
"""

from __future__ import annotations

from .graph import Graph, graph6_encode, iter_bits


def _refine(adj, cells):
    cells = list(cells)
    i = 0
    while i < len(cells):
        smask = 0
        for v in cells[i]:
            smask |= 1 << v
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            counts = [(adj[v] & smask).bit_count() for v in c]
            first = counts[0]
            if all(x == first for x in counts):
                out.append(c)
                continue
            split = True
            groups: dict[int, list[int]] = {}
            for v, k in zip(c, counts):
                groups.setdefault(k, []).append(v)
            for k in sorted(groups):
                out.append(groups[k])
        cells = out
        i = 0 if split else i + 1
    return cells


def _code(adj, perm):
    code = 0
    for j in range(1, len(perm)):
        row = adj[perm[j]]
        for i in range(j):
            code = (code << 1) | (row >> perm[i] & 1)
    return code


class _Search:
    __slots__ = ("adj", "best_code", "best_perm", "autos")

    def __init__(self, adj):
        self.adj = adj
        self.best_code = -1
        self.best_perm = None
        self.autos = []

    def run(self, cells, fixed):
        adj = self.adj
        cells = _refine(adj, cells)
        target = -1
        for idx, c in enumerate(cells):
            if len(c) > 1:
                target = idx
                break
        if target < 0:
            perm = [c[0] for c in cells]
            code = _code(adj, perm)
            if code > self.best_code:
                self.best_code = code
                self.best_perm = perm
            elif code == self.best_code:
                gamma = [0] * len(perm)
                for a, b in zip(self.best_perm, perm):
                    gamma[a] = b
                self.autos.append(gamma)
            return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if explored and self._equivalent(v, explored, fixed):
                continue
            explored.append(v)
            rest = [w for w in cell if w != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1:], fixed + [v])

    def _equivalent(self, v, explored, fixed):
        adj = self.adj
        bv = 1 << v
        for u in explored:
            bu = 1 << u
            if adj[u] & ~bv == adj[v] & ~bu:
                return True
        # orbit of v under found automorphisms fixing the prefix pointwise
        gens = [g for g in self.autos if all(g[x] == x for x in fixed)]
        if not gens:
            return False
        targets = set(explored)
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if y in targets:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False


def canonical_perm(g: Graph) -> list[int]:
    """Vertices listed in canonical order: position i holds the vertex labelled i."""
    n = g.order
    if n == 1:
        return [0]
    adj = g.adj
    # initial partition by degree
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(adj[v].bit_count(), []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    s = _Search(adj)
    s.run(cells, [])
    return s.best_perm


def canonical_form(g: Graph) -> Graph:
    perm = canonical_perm(g)
    label = [0] * g.order
    for i, v in enumerate(perm):
        label[v] = i
    adj = [0] * g.order
    for v, nb in enumerate(g.adj):
        m = 0
        for w in iter_bits(nb):
            m |= 1 << label[w]
        adj[label[v]] = m
    return Graph._trusted(g.order, tuple(adj))


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_form(g))


def isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
