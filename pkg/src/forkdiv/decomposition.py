"""Homogeneous sets via pair closure.

A homogeneous set is a proper module with at least two vertices: every
outside vertex sees all of it or none of it.  Any homogeneous set S and any
pair inside S have the same closure under "add the vertices mixed on the
current set", because vertices outside S are never mixed on a subset of S.
Sweeping all pairs therefore finds a homogeneous set whenever one exists.
"""

from __future__ import annotations

import itertools

from .graph import Graph, bits


def mixed_vertices(g: Graph, s: int) -> int:
    """Vertices outside s adjacent to some but not all of s."""
    if not s:
        raise ValueError("mixed_vertices needs a nonempty set")
    if s & ~g.vertex_mask:
        raise IndexError("subset mask has bits outside the vertex range")
    out = 0
    for v in bits(g.vertex_mask & ~s):
        inter = g.adj[v] & s
        if inter and inter != s:
            out |= 1 << v
    return out


def is_homogeneous_set(g: Graph, s: int) -> bool:
    return 1 < s.bit_count() < g.n and not mixed_vertices(g, s)


def find_homogeneous_set(g: Graph) -> int | None:
    """Smallest homogeneous set (ties: lexicographically least), or None.

    Closes each vertex pair under mixed-vertex addition; the closure is the
    least homogeneous candidate containing that pair.
    """
    if g.n < 3:
        return None
    best: tuple[int, tuple[int, ...], int] | None = None
    for u, v in itertools.combinations(range(g.n), 2):
        s = 1 << u | 1 << v
        while True:
            m = mixed_vertices(g, s)
            if not m:
                break
            s |= m
        if s == g.vertex_mask:
            continue
        key = (s.bit_count(), tuple(bits(s)), s)
        if best is None or key < best:
            best = key
    return best[2] if best else None
