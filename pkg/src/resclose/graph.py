"""Simple undirected graphs on at most 64 vertices, stored as bitsets.

Vertex ``v``'s neighbourhood is the integer ``adj[v]`` whose bit ``w`` is set
iff ``vw`` is an edge.  Graphs are immutable; every edit returns a new graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .dyadic import Dyadic

MAX_ORDER = 64
UNREACHABLE = -1

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or edit."""


class Graph:
    __slots__ = ("order", "adj", "_hash")

    def __init__(self, order: int, adj: Sequence[int]):
        if not 1 <= order <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {order}")
        adj = tuple(adj)
        if len(adj) != order:
            raise GraphError("adjacency length does not match order")
        full = (1 << order) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            w = nb
            while w:
                low = w & -w
                if not adj[low.bit_length() - 1] >> v & 1:
                    raise GraphError("adjacency is not symmetric")
                w ^= low
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((order, adj)))

    @classmethod
    def _trusted(cls, order: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_hash", hash((order, adj)))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph._trusted, (self.order, self.adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph({self.order}, edges={self.edges()})"

    @property
    def size(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, nb in enumerate(self.adj):
            for v in iter_bits(nb >> (u + 1)):
                out.append((u, u + 1 + v))
        return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(order: int, edges: Iterable[Edge]) -> Graph:
    if not 1 <= order <= MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {order}")
    adj = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(order, tuple(adj))


def empty_graph(order: int) -> Graph:
    return from_edges(order, ())


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    return Graph._trusted(order, tuple(full ^ (1 << v) for v in range(order)))


def path_graph(order: int) -> Graph:
    return from_edges(order, ((i, i + 1) for i in range(order - 1)))


def star_graph(order: int) -> Graph:
    """S_n = K_{1,n-1} with centre 0."""
    return from_edges(order, ((0, i) for i in range(1, order)))


# ---------------------------------------------------------------------------
# distances and closeness
# ---------------------------------------------------------------------------

def bfs_distances(g: Graph, u: int) -> list[int]:
    if not 0 <= u < g.order:
        raise GraphError(f"vertex {u} out of range")
    adj = g.adj
    dist = [UNREACHABLE] * g.order
    dist[u] = 0
    seen = frontier = 1 << u
    d = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        d += 1
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _scaled_sum(counts: list[int]) -> Dyadic:
    # sum of counts[d] * 2**-d
    top = len(counts) - 1
    total = 0
    for d in range(1, top + 1):
        if counts[d]:
            total += counts[d] << (top - d)
    return Dyadic(total, top)


def _distance_counts_from(adj: Sequence[int], u: int, counts: list[int]) -> None:
    seen = frontier = 1 << u
    d = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            break
        d += 1
        counts[d] += nxt.bit_count()
        seen |= nxt
        frontier = nxt


def distance_counts(adj: Sequence[int]) -> list[int]:
    """Number of ordered vertex pairs at each finite distance ``d >= 1``."""
    counts = [0] * (len(adj) + 1)
    for u in range(len(adj)):
        _distance_counts_from(adj, u, counts)
    while len(counts) > 1 and not counts[-1]:
        counts.pop()
    return counts


def vertex_closeness(g: Graph, u: int) -> Dyadic:
    if not 0 <= u < g.order:
        raise GraphError(f"vertex {u} out of range")
    counts = [0] * (g.order + 1)
    _distance_counts_from(g.adj, u, counts)
    return _scaled_sum(counts)


def adjacency_closeness(adj: Sequence[int]) -> Dyadic:
    return _scaled_sum(distance_counts(adj))


def closeness(g: Graph) -> Dyadic:
    """C(G): sum over ordered pairs of 2**-d(u, v); unreachable pairs add 0."""
    return adjacency_closeness(g.adj)


def is_connected(g: Graph) -> bool:
    return mask_connected(g.adj, (1 << g.order) - 1)


def mask_connected(adj: Sequence[int], mask: int) -> bool:
    """Whether the subgraph induced by ``mask`` is connected (empty counts as not)."""
    if not mask:
        return False
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by lowest vertex."""
    adj = g.adj
    rest = (1 << g.order) - 1
    out = []
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        out.append(seen)
        rest &= ~seen
    return out


# ---------------------------------------------------------------------------
# structural edits
# ---------------------------------------------------------------------------

def _norm_edge(g: Graph, e: Edge) -> Edge:
    u, v = e
    if not (0 <= u < g.order and 0 <= v < g.order):
        raise GraphError(f"edge ({u}, {v}) has an endpoint out of range")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return u, v


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = _norm_edge(g, e)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._trusted(g.order, tuple(adj))


def add_edge(g: Graph, e: Edge) -> Graph:
    u, v = _norm_edge(g, e)
    if g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is already an edge")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._trusted(g.order, tuple(adj))


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph on ``keep`` relabelled 0..len(keep)-1 in the given order."""
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        nb = 0
        for w in iter_bits(g.adj[v]):
            i = index.get(w)
            if i is not None:
                nb |= 1 << i
        adj.append(nb)
    return Graph._trusted(len(keep), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; higher labels shift down by one."""
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range")
    if g.order == 1:
        raise GraphError("cannot delete the only vertex")
    low = (1 << v) - 1
    adj = []
    for w, nb in enumerate(g.adj):
        if w != v:
            adj.append((nb & low) | ((nb >> (v + 1)) << v))
    return Graph._trusted(g.order - 1, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph._trusted(g.order, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.order + g2.order
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    shift = g1.order
    return Graph._trusted(n, g1.adj + tuple(nb << shift for nb in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    n = g1.order + g2.order
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    shift = g1.order
    low = (1 << shift) - 1
    high = ((1 << g2.order) - 1) << shift
    adj = tuple(nb | high for nb in g1.adj) + tuple((nb << shift) | low for nb in g2.adj)
    return Graph._trusted(n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``g``'s vertex ``v``."""
    adj = [0] * g.order
    for v, nb in enumerate(g.adj):
        m = 0
        for w in iter_bits(nb):
            m |= 1 << perm[w]
        adj[perm[v]] = m
    return Graph._trusted(g.order, tuple(adj))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

class Graph6Error(ValueError):
    """Malformed or unsupported graph6 text."""


def graph6_encode(g: Graph) -> str:
    n = g.order
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6Error(f"invalid graph6 character in {text!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error(f"unsupported graph6 order in {text!r}")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"graph6 order {n} not in 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 body has wrong length for order {n}: {text!r}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error(f"nonzero graph6 padding bits in {text!r}")
    return Graph._trusted(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)
