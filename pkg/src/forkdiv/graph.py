"""Bitset-backed simple undirected graphs.

Vertices are 0..n-1 and every vertex set is a plain int bitmask, so the
neighbourhood algebra used throughout the package (M(v) = V - N(v) - v,
induced subgraphs, mixed vertices) is a handful of and/or/not operations.
Graphs are immutable and hashable, which lets corpus-scale callers memoise
oracle results keyed on the graph itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .limits import DEFAULT_CAPS, CapacityError

MAX_VERTICES = 128


def bit(v: int) -> int:
    return 1 << v


def bits(mask: int):
    """Iterate the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph; adj[v] is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    # -- elementary accessors ------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self):
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def neighborhood(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v] | 1 << v

    def non_neighborhood(self, v: int) -> int:
        """M(v): everything outside N(v) and v itself.

        {v}, N(v), M(v) always partition the vertex set.
        """
        self._check_vertex(v)
        return self.vertex_mask & ~self.adj[v] & ~(1 << v)

    # -- transformations ------------------------------------------------

    def induced(self, s: int) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced on bitmask s plus the new->old index map.

        New indices follow ascending original index.
        """
        if s & ~self.vertex_mask:
            raise IndexError("subset mask has bits outside the vertex range")
        vmap = tuple(bits(s))
        pos = {v: i for i, v in enumerate(vmap)}
        adj = []
        for v in vmap:
            row = 0
            for u in bits(self.adj[v] & s):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(vmap), tuple(adj)), vmap

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm) -> "Graph":
        """Apply a permutation old index -> new index."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex range")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            for u in bits(row):
                adj[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(adj))

    def disjoint_union(self, other: "Graph") -> "Graph":
        adj = list(self.adj)
        adj.extend(row << self.n for row in other.adj)
        return Graph(self.n + other.n, tuple(adj))

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest member."""
        out = []
        rest = self.vertex_mask
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                grown = 0
                for v in bits(frontier):
                    grown |= self.adj[v]
                frontier = grown & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.components()) == 1

    def line_graph(self) -> tuple["Graph", tuple[tuple[int, int], ...]]:
        """Line graph plus the map from its vertices back to edges of self."""
        edge_list = tuple(self.edges())
        m = len(edge_list)
        adj = [0] * m
        for i, j in itertools.combinations(range(m), 2):
            a, b = edge_list[i]
            c, d = edge_list[j]
            if a == c or a == d or b == c or b == d:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return Graph(m, tuple(adj)), edge_list


def _are_twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    # Rows agree once the mutual bits are masked out; swapping such a pair
    # is an automorphism that fixes every other vertex.
    m = ~(1 << u | 1 << v)
    return adj[u] & m == adj[v] & m


def canonical_form(g: Graph, cap: int = DEFAULT_CAPS.canonical) -> bytes:
    """Canonical byte string; equal iff the graphs are isomorphic.

    Backtracks over vertex orderings for the lexicographically least
    adjacency bit string (column-major upper triangle).  At each depth only
    orderings whose next bit group is minimal can still win, so only those
    are branched, keeping one representative per twin pair; this collapses
    the factorial blowup on graphs with many interchangeable vertices.
    """
    n = g.n
    if n > cap:
        raise CapacityError("canonical_form", n, cap)
    if n <= 1:
        return bytes([n])
    adj = g.adj

    best: list[int] | None = None
    order: list[int] = []
    groups: list[int] = []  # groups[k] holds the k bits of order[k] vs order[0..k-1]

    def rec(used: int):
        nonlocal best
        k = len(order)
        if k == n:
            if best is None or groups < best:
                best = groups.copy()
            return
        lowest = -1
        cands: list[int] = []
        for v in bits(g.vertex_mask & ~used):
            val = 0
            for u in order:
                val = val << 1 | (adj[v] >> u & 1)
            if lowest < 0 or val < lowest:
                lowest = val
                cands = [v]
            elif val == lowest:
                cands.append(v)
        if best is not None:
            prefix = best[:k]
            if groups > prefix or (groups == prefix and lowest > best[k]):
                return
        kept: list[int] = []
        for v in cands:
            if any(_are_twins(adj, v, u) for u in kept):
                continue
            kept.append(v)
            order.append(v)
            groups.append(lowest)
            rec(used | 1 << v)
            order.pop()
            groups.pop()

    rec(0)
    assert best is not None
    packed = 0
    width = 0
    for k, val in enumerate(best):
        packed = packed << k | val
        width += k
    return bytes([n]) + packed.to_bytes((width + 7) // 8, "big")


def are_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAPS.canonical) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(row.bit_count() for row in g.adj) != sorted(row.bit_count() for row in h.adj):
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)
