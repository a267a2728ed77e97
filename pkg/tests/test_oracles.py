from itertools import combinations

import pytest
from hypothesis import given, settings

import bruteforce
from forkdiv.graph import Graph, bits, mask_of
from forkdiv.limits import CapacityError
from forkdiv.oracles import (
    chromatic_number,
    clique_number,
    exact_coloring,
    find_odd_antihole,
    find_odd_hole,
    find_odd_hole_subsets,
    independence_number,
    is_perfect,
    max_clique,
    max_weight_clique,
)
from strategies import graphs, weighted_graphs


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return Graph.from_edges(10, edges)


PAW = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
FORK = Graph.from_edges(5, [(2, 1), (2, 3), (2, 4), (0, 1)])


def test_clique_number_small_cases():
    assert clique_number(Graph.cycle(5)) == 2
    assert clique_number(Graph.complete(4)) == 4
    assert clique_number(PAW) == 3
    assert clique_number(Graph.empty(0)) == 0


def test_max_clique_witness_is_lex_least_maximum():
    for g in [Graph.cycle(5), PAW, Graph.complete(4), petersen()]:
        om = bruteforce.omega(g)
        best = min(
            (sub for sub in combinations(range(g.n), om)
             if all(g.has_edge(u, v) for u, v in combinations(sub, 2))),
        )
        assert tuple(bits(max_clique(g))) == best


def test_independence_number_small_cases():
    assert independence_number(Graph.cycle(5)) == 2
    assert independence_number(Graph.complete_bipartite(1, 3)) == 3
    # the fork carries a stable set of size 3
    assert independence_number(FORK) == 3


def test_max_weight_clique_small_cases():
    assert max_weight_clique(Graph.complete(2), (1, 1)) == (2, mask_of([0, 1]))
    value, _ = max_weight_clique(Graph.cycle(5), (1,) * 5)
    assert value == 2
    # pendant vertex 3 outweighs the triangle; the best clique is the
    # pendant edge {0, 3} at 5 + 1
    assert max_weight_clique(PAW, (1, 1, 1, 5)) == (6, mask_of([0, 3]))
    assert bruteforce.max_weight_clique(PAW, (1, 1, 1, 5)) == 6


def test_max_weight_clique_rejects_bad_weights():
    with pytest.raises(ValueError):
        max_weight_clique(Graph.complete(2), (1,))
    with pytest.raises(ValueError):
        max_weight_clique(Graph.complete(2), (1, -1))


@given(weighted_graphs())
def test_max_weight_clique_matches_brute_force(gw):
    g, w = gw
    value, witness = max_weight_clique(g, w)
    assert value == bruteforce.max_weight_clique(g, w)
    vs = list(bits(witness))
    assert all(g.has_edge(u, v) for u, v in combinations(vs, 2))
    assert sum(w[v] for v in vs) == value


@given(graphs(min_n=1, max_n=6))
def test_unit_weights_reduce_to_clique_number(g):
    value, witness = max_weight_clique(g, (1,) * g.n)
    assert value == clique_number(g)
    assert witness == max_clique(g)


def test_chromatic_number_small_cases():
    assert chromatic_number(Graph.cycle(5)) == 3
    assert chromatic_number(Graph.complete(4)) == 4
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(Graph.empty(0)) == 0


@given(graphs(max_n=6))
def test_exact_coloring_is_proper_and_minimum(g):
    colors = exact_coloring(g)
    chi = chromatic_number(g)
    assert len(colors) == g.n
    assert sorted(set(colors)) == list(range(chi))
    for u, v in g.edges():
        assert colors[u] != colors[v]
    assert chi == bruteforce.chi(g)


@given(graphs(min_n=1, max_n=6))
def test_omega_at_most_chi(g):
    assert clique_number(g) <= chromatic_number(g)


@given(graphs(max_n=6))
def test_alpha_is_omega_of_complement(g):
    assert independence_number(g) == clique_number(g.complement())
    assert independence_number(g) == bruteforce.alpha(g)


def test_odd_hole_golden_cases():
    hole = find_odd_hole(Graph.cycle(5))
    assert hole == mask_of(range(5))
    assert find_odd_hole(Graph.cycle(6)) is None
    assert find_odd_hole(Graph.complete_bipartite(3, 3)) is None
    assert find_odd_hole(Graph.path(7)) is None
    hole7 = find_odd_hole(Graph.cycle(7))
    assert hole7 == mask_of(range(7))


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_odd_hole_agrees_with_subset_enumeration(g):
    fast = find_odd_hole(g)
    slow = find_odd_hole_subsets(g)
    brute = bruteforce.odd_holes(g)
    assert (fast is None) == (slow is None) == (not brute)
    if fast is not None:
        assert tuple(sorted(bits(fast))) in brute
        assert tuple(sorted(bits(slow))) in brute


def test_perfection_golden_cases():
    assert not is_perfect(Graph.cycle(5))
    assert is_perfect(Graph.path(6))
    assert not is_perfect(Graph.cycle(7).complement())
    assert is_perfect(Graph.empty(0))
    assert find_odd_antihole(Graph.cycle(7).complement()) is not None


@given(graphs(max_n=7))
def test_perfection_matches_chi_equals_omega_everywhere(g):
    assert is_perfect(g) == bruteforce.is_perfect(g)


@given(graphs(max_n=6))
def test_perfection_is_self_complementary(g):
    assert is_perfect(g) == is_perfect(g.complement())


def test_capacity_errors():
    big = Graph.empty(17)
    with pytest.raises(CapacityError):
        chromatic_number(big)
    with pytest.raises(CapacityError):
        find_odd_hole(Graph.empty(20))
    with pytest.raises(CapacityError):
        find_odd_hole_subsets(Graph.empty(11))
