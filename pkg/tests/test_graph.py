import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minsep.errors import GraphError
from minsep.generators import named, theta
from minsep.graph import (
    INFINITY,
    Graph,
    canonical_form,
    co_components,
    complement,
    complete_graph,
    components,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    from_edge_list,
    girth,
    independence_number,
    induced_subgraph,
    is_isomorphic,
    join,
    line_graph,
    path_graph,
    relabel,
)
from oracles import isomorphic, to_nx


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edge_list(n, chosen)


# -- construction ----------------------------------------------------------------


def test_from_edge_list_path():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g == path_graph(4)
    assert g.degrees() == [1, 2, 2, 1]


def test_single_vertex():
    g = from_edge_list(1, [])
    assert g.n == 1 and g.m == 0


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (0, 1)])
    assert g.m == 1
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(GraphError):
        from_edge_list(3, edges)


def test_zero_vertices_rejected():
    with pytest.raises(GraphError):
        from_edge_list(0, [])
    with pytest.raises(GraphError):
        induced_subgraph(path_graph(3), [])


def test_graph_validates_symmetry():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))


# -- complement, components ---------------------------------------------------------


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    c5 = cycle_graph(5)
    assert is_isomorphic(complement(c5), c5)
    assert is_isomorphic(complement(named("claw")), named("K3+P1"))


def test_components_examples():
    assert sorted(map(len, components(named("2P2")))) == [2, 2]
    assert [len(c) for c in components(cycle_graph(6))] == [6]
    assert sorted(map(len, components(empty_graph(4)))) == [1, 1, 1, 1]


def test_co_components_examples():
    assert sorted(map(len, co_components(complete_graph(4)))) == [1, 1, 1, 1]
    assert sorted(map(len, co_components(cycle_graph(4)))) == [2, 2]
    assert len(co_components(path_graph(4))) == 1


def test_induced_subgraph_examples():
    assert induced_subgraph(cycle_graph(5), [1, 2, 3, 4]) == path_graph(4)
    assert induced_subgraph(complete_graph(4), [0, 2, 3]) == complete_graph(3)
    assert induced_subgraph(named("paw"), [0, 1, 2]) == complete_graph(3)


def test_union_and_join_examples():
    assert is_isomorphic(disjoint_union([path_graph(2), path_graph(2)]), named("2P2"))
    assert is_isomorphic(disjoint_union([complete_graph(3), path_graph(1)]), named("K3+P1"))
    assert disjoint_union([path_graph(1)] * 4) == empty_graph(4)
    assert join([path_graph(1), path_graph(1)]) == complete_graph(2)
    assert is_isomorphic(join([empty_graph(2), empty_graph(2)]), cycle_graph(4))
    wheel = join([cycle_graph(5), path_graph(1)])
    assert wheel.n == 6 and wheel.degree(5) == 5


def test_delete_vertex():
    assert delete_vertex(cycle_graph(5), 0) == path_graph(4)


# -- line graph ---------------------------------------------------------------------------


def test_line_graph_examples():
    lc4, emap = line_graph(cycle_graph(4))
    assert is_isomorphic(lc4, cycle_graph(4))
    assert len(emap) == 4
    assert line_graph(named("claw"))[0] == complete_graph(3)
    assert canonical_form(line_graph(theta(2, 2))[0]) == canonical_form(cycle_graph(4))


def test_line_graph_rejects_edgeless():
    with pytest.raises(GraphError):
        line_graph(empty_graph(3))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_line_graph_matches_networkx(g):
    if g.m == 0:
        return
    lg, emap = line_graph(g)
    assert lg.n == g.m
    assert isomorphic(lg, _nx_line(g))
    for i, (u, v) in enumerate(emap):
        assert lg.degree(i) == g.degree(u) + g.degree(v) - 2


def _nx_line(g):
    lg = nx.line_graph(to_nx(g))
    mapping = {e: i for i, e in enumerate(lg.nodes)}
    return from_edge_list(len(mapping), [(mapping[a], mapping[b]) for a, b in lg.edges])


# -- girth and independence ---------------------------------------------------------------


def test_girth_examples():
    assert girth(theta(3, 3)) == 6
    assert girth(path_graph(4)) == INFINITY
    assert girth(complete_graph(4)) == 3


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_girth_matches_networkx(g):
    expected = nx.girth(to_nx(g))
    assert girth(g) == expected
    assert (girth(g) == math.inf) == nx.is_forest(to_nx(g))


def _shortest_induced_cycle(g):
    best = math.inf
    for k in range(3, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            h = induced_subgraph(g, combo)
            if h.m == k and all(d == 2 for d in h.degrees()) and h.is_connected():
                return k
    return best


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_girth_is_shortest_induced_cycle(g):
    assert girth(g) == _shortest_induced_cycle(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_independence_number_matches_networkx(g):
    expected = max(len(c) for c in nx.find_cliques(nx.complement(to_nx(g))))
    assert independence_number(g) == expected == g.independence_number


# -- labeled enumeration and canonical forms -------------------------------------------------


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 8), (4, 64)])
def test_enumerate_labeled_counts(n, count):
    gs = list(enumerate_labeled_graphs(n))
    assert len(gs) == count == len(set(gs))


def test_four_vertex_classes():
    assert len({canonical_form(g) for g in enumerate_labeled_graphs(4)}) == 11


def test_isomorphism_class_counts_up_to_six():
    # Known counts of unlabeled graphs on n vertices.
    for n, classes in [(5, 34), (6, 156)]:
        assert len({canonical_form(g) for g in enumerate_labeled_graphs(n)}) == classes


def test_enumerate_over_limit():
    with pytest.raises(GraphError):
        next(enumerate_labeled_graphs(7))


def test_canonical_form_examples():
    assert canonical_form(cycle_graph(4)) == canonical_form(complement(named("2P2")))
    assert canonical_form(named("claw")) != canonical_form(named("paw"))


def test_canonical_form_rejects_large():
    with pytest.raises(GraphError):
        canonical_form(path_graph(11))


@pytest.mark.parametrize("n", range(1, 8))
def test_canonical_form_invariant_under_relabeling(n):
    rng = random.Random(n)
    for _ in range(200):
        g = from_edge_list(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_decides_isomorphism(g, h):
    assert (canonical_form(g) == canonical_form(h)) == isomorphic(g, h)


# -- structural properties ------------------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_union_component_count(g1, g2):
    u = disjoint_union([g1, g2])
    assert len(components(u)) == len(components(g1)) + len(components(g2))


@settings(max_examples=60, deadline=None)
@given(st.lists(graphs(max_n=5), min_size=1, max_size=3))
def test_join_co_components_refine(gs):
    j = join(gs)
    offsets = list(itertools.accumulate([0] + [g.n for g in gs]))
    expected = {frozenset(v + off for v in c) for g, off in zip(gs, offsets) for c in co_components(g)}
    assert set(co_components(j)) == expected


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_components_match_networkx(g):
    expected = {frozenset(c) for c in nx.connected_components(to_nx(g))}
    assert set(components(g)) == expected
    assert set(g.component_masks) == {sum(1 << v for v in c) for c in expected}
