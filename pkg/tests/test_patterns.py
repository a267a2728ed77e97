import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce
from forkdiv.graph import Graph, are_isomorphic
from forkdiv.oracles import clique_number, independence_number
from forkdiv.patterns import (
    CATALOG,
    CLASS_BOUNDS,
    classify,
    claw_center,
    find_induced,
    has_induced,
    is_free,
    iter_induced,
    pattern,
    pattern_names,
)
from strategies import graphs
from test_oracles import petersen


def test_catalog_sanity():
    fork = pattern("fork")
    assert fork.n == 5 and fork.edge_count == 4
    assert independence_number(fork) == 3
    assert are_isomorphic(pattern("dart").complement(), pattern("co-dart"))
    assert are_isomorphic(pattern("antifork"), fork.complement())
    assert len(pattern("co-cricket").components()) == 2
    assert are_isomorphic(pattern("co-P5"), Graph.path(5).complement())
    assert clique_number(pattern("K5-e")) == 4
    assert are_isomorphic(
        pattern("co-(P3+2K1)"),
        Graph.path(3).disjoint_union(Graph.empty(2)).complement(),
    )


def test_pattern_aliases_and_unknown():
    assert pattern("K1,3") == pattern("claw")
    assert pattern("paw+K1") == pattern("co-dart")
    assert pattern("diamond+K1") == pattern("co-cricket")
    with pytest.raises(ValueError):
        pattern("heptagram")
    assert "fork" in pattern_names()


def test_find_induced_golden_cases():
    assert find_induced(Graph.cycle(5), pattern("fork"), "fork") is None
    w = find_induced(Graph.complete_bipartite(1, 3), pattern("claw"), "claw")
    assert w is not None and w.validate(Graph.complete_bipartite(1, 3), pattern("claw"))
    w = find_induced(petersen(), pattern("claw"), "claw")
    assert w is not None and w.validate(petersen(), pattern("claw"))


def test_is_free_golden_cases():
    ok, _ = is_free(Graph.cycle(5), ["fork", "P6", "dart", "banner", "bull", "co-dart", "co-cricket"])
    assert ok
    co_dart = pattern("co-dart")
    ok, w = is_free(co_dart, ["co-dart"])
    assert not ok and sorted(w.mapping) == list(range(5))
    ok, _ = is_free(Graph.cycle(6), ["P6"])
    assert ok


def test_claw_center_golden_cases():
    assert claw_center(Graph.complete_bipartite(1, 3)) == (0, (1, 2, 3))
    assert claw_center(Graph.cycle(7)) is None
    # the fork's claw sits at its degree-3 vertex
    v, _ = claw_center(pattern("fork"))
    assert v == 2
    assert claw_center(petersen()) == (0, (1, 4, 5))


@given(graphs(max_n=6))
def test_claw_free_three_ways(g):
    a = claw_center(g) is None
    b = find_induced(g, pattern("claw"), "claw") is None
    c = not bruteforce.induced_embeddings(g, pattern("claw"))
    assert a == b == c


@settings(max_examples=60)
@given(graphs(max_n=6), st.sampled_from(["P4", "claw", "paw", "diamond", "C4", "fork", "bull", "2K2"]))
def test_iter_induced_matches_all_injections_oracle(g, name):
    pat = pattern(name)
    got = set(iter_induced(g, pat))
    want = bruteforce.induced_embeddings(g, pat)
    assert got == want
    for mapping in got:
        from forkdiv.patterns import PatternWitness

        assert PatternWitness(name, mapping).validate(g, pat)


@given(graphs(max_n=6))
def test_witnesses_always_validate(g):
    for name in ("claw", "paw", "C4", "fork", "P4"):
        w = find_induced(g, pattern(name), name)
        if w is not None:
            assert w.validate(g, pattern(name))
            assert w.pattern_name == name
        assert (w is not None) == has_induced(g, name)


def test_bound_record_values():
    assert CLASS_BOUNDS["P6"].evaluate(2) == 3
    assert CLASS_BOUNDS["P6"].evaluate(4) == 10
    assert CLASS_BOUNDS["dart"].evaluate(3) == 9
    assert CLASS_BOUNDS["K5-e"].evaluate(3) == 4
    assert CLASS_BOUNDS["antifork"].evaluate(3) == 6
    assert CLASS_BOUNDS["K3"].evaluate(2) == 3
    assert CLASS_BOUNDS["P6"].text == "binom(omega+1,2)"
    assert CLASS_BOUNDS["claw"].text == "omega^2"


def test_classify_cycle_hits_every_division_class():
    report = classify(Graph.cycle(5))
    assert report.omega == 2 and report.fork_free
    by_name = {m.forbidden: m for m in report.memberships}
    for name in ("P6", "co-dart", "bull", "dart", "banner", "co-cricket"):
        assert by_name[name].free, name
    assert by_name["P6"].value == 3
    assert by_name["dart"].value == 4
    assert report.tightest == ("K3", 3)


def test_classify_complete_graph():
    report = classify(Graph.complete(4))
    by_name = {m.forbidden: m for m in report.memberships}
    assert report.fork_free
    assert not by_name["K3"].free
    assert by_name["P6"].free and by_name["P6"].value == 10
    assert by_name["K5-e"].free and by_name["K5-e"].value == 5


def test_classify_fork_itself_matches_nothing():
    report = classify(pattern("fork"))
    assert not report.fork_free
    assert all(not m.free for m in report.memberships)
    assert report.tightest is None


def test_classify_json_shape():
    payload = classify(Graph.cycle(5)).to_json()
    assert set(payload) == {"omega", "fork_free", "classes", "tightest"}
    assert payload["tightest"] == {"forbidden": "K3", "value": 3}
    assert len(payload["classes"]) == len(CLASS_BOUNDS)
