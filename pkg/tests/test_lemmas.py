import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minsep.errors import GraphError, PreconditionError, SamplingError
from minsep.generators import c5_blowup, complete_multipartite, named
from minsep.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    from_edge_list,
    join,
    path_graph,
    relabel,
)
from minsep.lemmas import (
    RAMSEY,
    RamseyTable,
    check_2p2_separator_shapes,
    check_chordal_bound,
    check_cograph_bound,
    check_join_formula,
    check_p2_2p1_c4_bound,
    check_ramsey_bound,
    check_union_formula,
    check_vertex_ops,
    has_clique_or_independent,
    is_chordal,
    maximum_cardinality_search,
    near_twin_pairs,
    paw_free_structure,
    perfect_elimination_ordering,
    resynthesize,
    structure_3p1c4,
    verify_ramsey_value_33,
)
from minsep.patterns import contains_induced, family, is_family_free
from minsep.random_graphs import (
    random_chordal,
    random_cograph,
    random_graph,
    random_induced_subgraph,
    random_ramsey_free,
)
from minsep.separators import minimal_separators, separator_count, separator_masks
from minsep.suites import CLAIMS, _Collector, run_suites
from oracles import to_nx
from test_graph import graphs


# -- operations ----------------------------------------------------------------------------


def test_union_formula_examples():
    assert check_union_formula(named("2P2")) and separator_count(named("2P2")) == 1
    assert check_union_formula(named("K3+P1")) and separator_count(named("K3+P1")) == 1
    p4p4 = disjoint_union([path_graph(4), path_graph(4)])
    assert check_union_formula(p4p4) and separator_count(p4p4) == 5
    with pytest.raises(PreconditionError):
        check_union_formula(path_graph(3))


def test_join_formula_examples():
    assert check_join_formula([path_graph(4), path_graph(1)])
    assert separator_count(join([path_graph(4), path_graph(1)])) == 2
    assert check_join_formula([empty_graph(2), empty_graph(2)])
    assert separator_count(cycle_graph(4)) == 2
    assert check_join_formula([complete_graph(2), complete_graph(2)])
    assert separator_count(complete_graph(4)) == 0
    with pytest.raises(PreconditionError):
        check_join_formula([path_graph(3)])


@settings(max_examples=50, deadline=None)
@given(st.lists(graphs(max_n=4), min_size=2, max_size=3))
def test_join_formula_random(gs):
    assert check_join_formula(gs)
    assert separator_count(join(gs)) == sum(separator_count(g) for g in gs)


def test_vertex_ops_examples():
    apex = join([path_graph(4), path_graph(1)])
    rep = check_vertex_ops(apex)
    assert rep.ok and rep.checked["universal"] == 1
    assert separator_count(apex) == 2
    twin = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1)])  # vertex 4 duplicates endpoint 0
    rep = check_vertex_ops(twin)
    assert rep.ok and rep.checked["true-twin"] >= 1 and separator_count(twin) == 2
    paw = named("paw")
    assert check_vertex_ops(paw).ok and separator_count(paw) == 1


def test_near_twins():
    assert (0, 2) in near_twin_pairs(cycle_graph(4))
    for s in minimal_separators(cycle_graph(4)).separators:
        assert (0 in s) == (2 in s)


# -- bounds ------------------------------------------------------------------------------------


def test_cograph_bound_examples():
    assert check_cograph_bound(cycle_graph(4)) and separator_count(cycle_graph(4)) == 2
    assert check_cograph_bound(complete_graph(4))
    assert check_cograph_bound(random_cograph(30, 7))
    with pytest.raises(PreconditionError):
        check_cograph_bound(path_graph(4))


def test_chordal_bound_examples():
    assert check_chordal_bound(path_graph(4))
    assert check_chordal_bound(complete_graph(4))
    assert check_chordal_bound(random_chordal(25, 3))
    with pytest.raises(PreconditionError):
        check_chordal_bound(cycle_graph(4))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))
    order = perfect_elimination_ordering(g)
    assert (order is not None) == is_chordal(g)
    assert sorted(maximum_cardinality_search(g)) == list(range(g.n))


def test_2p2_shapes_examples():
    assert check_2p2_separator_shapes(cycle_graph(4))
    assert check_2p2_separator_shapes(cycle_graph(5)) and separator_count(cycle_graph(5)) == 5
    k33 = join([empty_graph(3), empty_graph(3)])
    assert check_2p2_separator_shapes(k33)
    assert set(separator_masks(k33)) == {0b000111, 0b111000}
    with pytest.raises(PreconditionError):
        check_2p2_separator_shapes(named("2P2"))


def test_p2_2p1_c4_bound():
    assert check_p2_2p1_c4_bound(cycle_graph(5))
    with pytest.raises(PreconditionError):
        check_p2_2p1_c4_bound(cycle_graph(4))


def test_ramsey_bound_examples():
    assert check_ramsey_bound(cycle_graph(5), 2, 2, 2)
    assert check_ramsey_bound(cycle_graph(5), 3, 3, 6)
    g = random_ramsey_free(14, 3, 3, seed=1)
    assert check_ramsey_bound(g, 3, 3, 6)
    with pytest.raises(PreconditionError):
        check_ramsey_bound(cycle_graph(5), 3, 3, 5)
    with pytest.raises(PreconditionError):
        check_ramsey_bound(named("2P2"), 2, 2, 2)


def test_ramsey_bound_agrees_with_2p2_shapes():
    for g in enumerate_labeled_graphs(5):
        if is_family_free(g, family("2P2,P2+2P1")):
            assert check_ramsey_bound(g, 2, 2, 2) == check_2p2_separator_shapes(g)


# -- Ramsey ---------------------------------------------------------------------------------------


def test_ramsey_value_33():
    assert verify_ramsey_value_33()
    assert not has_clique_or_independent(cycle_graph(5), 3, 3)
    assert has_clique_or_independent(complete_graph(6), 3, 3)


def test_ramsey_table():
    assert RAMSEY.upper_bound(1, 7) == 1 and RAMSEY.upper_bound(2, 5) == 5 and RAMSEY.upper_bound(4, 2) == 4
    assert RAMSEY.upper_bound(3, 3) == 6
    for k, l in [(1, 3), (2, 3), (3, 2), (2, 5), (3, 3)]:
        assert RAMSEY.certify(k, l)
    with pytest.raises(GraphError):
        RAMSEY.upper_bound(3, 4)
    with pytest.raises(GraphError):
        RAMSEY.certify(2, 7)


def test_ramsey_table_user_bounds():
    t = RamseyTable()
    t.add_upper_bound(3, 4, 9)
    assert t.upper_bound(3, 4) == 9
    with pytest.raises(GraphError):
        t.add_upper_bound(3, 5, 8)  # below the bound for a smaller pair
    with pytest.raises(GraphError):
        t.add_upper_bound(3, 3, 5)  # contradicts R(3,3)=6
    with pytest.raises(GraphError):
        t.exact(0, 3)


# -- structure ----------------------------------------------------------------------------------


def test_paw_free_examples():
    assert [v.tag for v in paw_free_structure(cycle_graph(5))] == ["K3-free"]
    (v,) = paw_free_structure(complete_multipartite((2, 3)))
    assert v.tag == "complete-multipartite" and v.params == (2, 3)
    (v,) = paw_free_structure(complete_graph(3))
    assert v.params == (1, 1, 1)
    with pytest.raises(PreconditionError):
        paw_free_structure(named("paw"))


def test_paw_free_multiple_components():
    g = disjoint_union([complete_multipartite((1, 2, 2)), cycle_graph(6), path_graph(1)])
    tags = sorted(v.tag for v in paw_free_structure(g))
    assert tags == ["K3-free", "complete-multipartite", "complete-multipartite"]


def test_structure_3p1c4_examples():
    v = structure_3p1c4(cycle_graph(5))
    assert v.tag == "c5-blowup" and v.params == (1, 1, 1, 1, 1, 0)
    split = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert structure_3p1c4(split).tag == "chordal"
    with pytest.raises(PreconditionError):
        structure_3p1c4(cycle_graph(4))


@pytest.mark.parametrize("m,t", [((2, 1, 3, 1, 2), 2), ((1, 1, 1, 1, 2), 0), ((3, 3, 1, 1, 1), 1)])
def test_structure_recovers_blowups(m, t):
    g = c5_blowup(m, t)
    perm = list(range(g.n))
    random.Random(sum(m)).shuffle(perm)
    v = structure_3p1c4(relabel(g, perm))
    assert v.params[5] == t and sorted(v.params[:5]) == sorted(m)
    assert nx.is_isomorphic(to_nx(resynthesize(v)), to_nx(g))


def test_structure_exhaustive_six():
    arms = {"chordal": 0, "c5-blowup": 0}
    for g in enumerate_labeled_graphs(6):
        if is_family_free(g, family("3P1,C4")):
            arms[structure_3p1c4(g).tag] += 1
    assert arms["c5-blowup"] > 0 and arms["chordal"] > 0


# -- random generators --------------------------------------------------------------------------


def test_random_cograph_examples():
    assert random_cograph(1, 5) == empty_graph(1)
    for s in range(100):
        g = random_cograph(random.Random(s).randint(1, 12), s)
        assert is_family_free(g, family("P4"))


def test_random_chordal_examples():
    for s in range(100):
        g = random_chordal(random.Random(s).randint(1, 15), s)
        assert is_chordal(g) and nx.is_chordal(to_nx(g))


def test_generators_are_deterministic():
    assert random_cograph(20, 3) == random_cograph(20, 3)
    assert random_chordal(20, 3) == random_chordal(20, 3)
    assert random_graph(10, 0.5, 9) == random_graph(10, 0.5, 9)
    with pytest.raises(GraphError):
        random_cograph(0, 1)


def test_random_induced_subgraph_is_induced():
    g = random_graph(10, 0.5, 1)
    h, mask = random_induced_subgraph(g, 2)
    assert contains_induced(g, h) and separator_count(h) <= separator_count(g)


def test_ramsey_sampler():
    g = random_ramsey_free(10, 3, 3, seed=4)
    assert not contains_induced(g, disjoint_union([path_graph(2), empty_graph(3)]))
    assert not contains_induced(g, disjoint_union([complete_graph(3), path_graph(2)]))
    with pytest.raises(SamplingError):
        random_ramsey_free(30, 2, 2, seed=0, p=0.1, max_draws=5)


# -- suites --------------------------------------------------------------------------------------


@pytest.fixture(scope="module")
def small_report():
    return run_suites("all", max_n=5, seed=0)


def test_suites_pass_at_five(small_report):
    assert small_report.ok
    ids = {r.check_id for r in small_report.results}
    assert {"union-formula", "join-lift", "cograph-bound", "3p1-c4-structure", "wall-certificates"} <= ids
    for r in small_report.results:
        assert r.paper_ref == CLAIMS[r.check_id]
        assert r.checked > 0


def test_suite_json_shape(small_report):
    d = small_report.results[0].as_dict()
    assert set(d) == {"suite", "check_id", "paper_ref", "status", "checked"}


def test_unknown_suite():
    with pytest.raises(GraphError):
        run_suites("nope")


def test_monotone_on_random_pairs():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng.randint(2, 12), rng.uniform(0.2, 0.7), rng)
        h, _ = random_induced_subgraph(g, rng)
        assert separator_count(h) <= separator_count(g)


def test_vertex_ops_exhaustive_small():
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            assert check_vertex_ops(g).ok


def test_counterexample_reporting():
    col = _Collector("ops")
    col.check("monotone", True, cycle_graph(4))
    col.check("monotone", False, cycle_graph(4), "detail")
    col.check("monotone", False, cycle_graph(5))
    (r,) = col.results()
    assert r.status == "fail" and r.checked == 3
    assert r.counterexample == "n=4 edges=0-1 0-3 1-2 2-3; detail"
