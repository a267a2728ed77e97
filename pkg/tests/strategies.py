"""Hypothesis strategies shared across the suite."""

from itertools import combinations

from hypothesis import strategies as st

from forkdiv.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Graph.empty(n)
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Graph.empty(n)
    # a random spanning tree first, then extra edges on top
    tree = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    pairs = list(combinations(range(n), 2))
    extra = draw(st.sets(st.sampled_from(pairs)))
    return Graph.from_edges(n, sorted(set(map(lambda e: tuple(sorted(e)), tree)) | extra))


@st.composite
def weighted_graphs(draw, min_n: int = 1, max_n: int = 6, max_w: int = 5):
    g = draw(graphs(min_n, max_n))
    w = tuple(draw(st.integers(0, max_w)) for _ in range(g.n))
    return g, w
