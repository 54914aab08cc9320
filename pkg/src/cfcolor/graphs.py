"""Graph and hypergraph representations plus the structural subroutines
used by the randomized coloring pipeline.

Vertices are dense integers 0..n-1.  All objects are immutable after
construction; operations never mutate their arguments.
"""

from __future__ import annotations

import random
from functools import cached_property


class Graph:
    """Finite, simple, undirected graph with array-backed adjacency."""

    __slots__ = ("n", "adj", "_masks", "__dict__")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in adj)
        # bitmask adjacency for fast set arithmetic in the solvers
        self._masks = tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)

    @property
    def vertices(self):
        return range(self.n)

    @cached_property
    def edges(self):
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adj[v])

    def max_degree(self):
        return max((len(a) for a in self.adj), default=0)

    def neighbor_mask(self, v):
        return self._masks[v]

    def closed_neighborhood(self, v):
        return tuple(sorted(self.adj[v] + (v,)))

    def has_edge(self, u, v):
        return v in self.adj[u]

    def has_isolated_vertex(self):
        return any(not a for a in self.adj)

    def remove_vertices(self, drop):
        """Induced subgraph on V minus `drop`, with the vertex relabeling map.

        Returns (subgraph, old_of_new) where old_of_new[i] is the original
        id of the subgraph's vertex i.
        """
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        new_of_old = {v: i for i, v in enumerate(keep)}
        edges = [
            (new_of_old[u], new_of_old[v])
            for u, v in self.edges
            if u not in drop and v not in drop
        ]
        return Graph(len(keep), edges), keep

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Hypergraph:
    """Vertex set 0..n-1 plus a list of non-empty vertex subsets.

    Duplicate edges are kept: derived neighborhood hypergraphs must stay
    in one-to-one correspondence with the vertices of the source graph.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n, edges):
        edges = tuple(tuple(sorted(set(e))) for e in edges)
        for e in edges:
            if not e:
                raise ValueError("hyperedges must be non-empty")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} out of range for n={n}")
        self.n = n
        self.edges = edges

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={self.m})"


def derived_hypergraph(g, mode):
    """Hypergraph of open or closed vertex neighborhoods, one edge per
    vertex in vertex order.
    """
    if mode not in ("open", "closed"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "open":
        for v in range(g.n):
            if not g.adj[v]:
                raise ValueError(f"vertex {v} is isolated; open neighborhood empty")
        return Hypergraph(g.n, [g.adj[v] for v in range(g.n)])
    return Hypergraph(g.n, [g.closed_neighborhood(v) for v in range(g.n)])


def hypergraph_stats(h):
    """(max vertex degree, max number of other edges an edge meets,
    min edge size, max edge size), all by exact enumeration."""
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    max_deg = max(deg, default=0)
    edge_sets = [set(e) for e in h.edges]
    gamma = 0
    for i, ei in enumerate(edge_sets):
        hits = sum(1 for j, ej in enumerate(edge_sets) if j != i and ei & ej)
        gamma = max(gamma, hits)
    sizes = [len(e) for e in h.edges]
    return max_deg, gamma, min(sizes, default=0), max(sizes, default=0)


def _max_independent_in(mask, masks):
    """Size of a maximum independent set within the vertex bitmask `mask`."""
    if mask == 0:
        return 0
    v = (mask & -mask).bit_length() - 1
    rest = mask & ~(1 << v)
    # branch: exclude v, or include v and drop its neighbors
    best = _max_independent_in(rest, masks)
    with_v = 1 + _max_independent_in(rest & ~masks[v], masks)
    return max(best, with_v)


def max_star(g):
    """Largest t such that g contains an induced star K_{1,t}.

    Equals the maximum, over vertices v, of the maximum independent set
    size inside N(v).  g is K_{1,k}-free exactly for all k > max_star(g).
    Returns 0 for edgeless graphs.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    best = 0
    for v in range(g.n):
        best = max(best, _max_independent_in(g.neighbor_mask(v), g._masks))
    return best


def maximal_independent_set(g, order=None):
    """Greedy maximal independent set, scanning vertices in `order`
    (default: increasing id)."""
    if order is None:
        order = range(g.n)
    chosen = set()
    blocked = set()
    for v in order:
        if v not in blocked and v not in chosen:
            chosen.add(v)
            blocked.update(g.adj[v])
    return frozenset(chosen)


class GreedyClasses:
    """Color classes S_1..S_s of a greedy proper coloring.

    The classes partition the vertex set, each class is independent, and
    every vertex of S_i (i >= 2) has a neighbor in each earlier class.
    """

    __slots__ = ("classes",)

    def __init__(self, classes):
        self.classes = tuple(frozenset(c) for c in classes)

    @property
    def s(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]


def greedy_color_classes(g, order=None):
    """Greedy proper coloring: each vertex gets the smallest color not
    used by an already-colored neighbor."""
    if order is None:
        order = range(g.n)
    color = {}
    classes = []
    for v in order:
        used = {color[w] for w in g.adj[v] if w in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
        if c == len(classes):
            classes.append(set())
        classes[c].add(v)
    return GreedyClasses(classes)


def extended_double_cover(g):
    """Bipartite double D_g on vertices x_0..x_{n-1}, y_0..y_{n-1}.

    x_i is adjacent to y_j iff i == j or ij is an edge of g; there are no
    edges inside either part.  x_i is vertex i, y_i is vertex n+i.
    """
    n = g.n
    edges = [(i, n + i) for i in range(n)]
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((v, n + u))
    return Graph(2 * n, edges)


def line_graph(g):
    """Line graph of g, plus the base edge carried by each vertex.

    Returns (L, base_edges) where vertex i of L corresponds to
    base_edges[i].  Line graphs are claw-free.
    """
    base_edges = list(g.edges)
    index_of = {e: i for i, e in enumerate(base_edges)}
    ledges = set()
    incident = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(base_edges):
        incident[u].append(i)
        incident[v].append(i)
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                ledges.add((min(ids[a], ids[b]), max(ids[a], ids[b])))
    return Graph(len(base_edges), sorted(ledges)), base_edges


def random_graph(n, p, rng):
    """Erdos-Renyi G(n, p) from an explicit random.Random."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_hypergraph(n, m, size_lo, size_hi, rng):
    """m random hyperedges, each a uniform subset with size in
    [size_lo, size_hi]."""
    if size_hi > n:
        raise ValueError("edge size exceeds vertex count")
    edges = []
    for _ in range(m):
        size = rng.randint(size_lo, size_hi)
        edges.append(rng.sample(range(n), size))
    return Hypergraph(n, edges)
