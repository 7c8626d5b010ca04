import pytest
from hypothesis import given, settings, strategies as st

from wheelturan import constructions as cons
from wheelturan.detect import (
    WheelForestPattern, chromatic_number, contains_path, contains_subgraph,
    contains_wheel,
)
from wheelturan.errors import DomainError
from wheelturan.formulas import ex_even_wheel_mix, family_edges
from wheelturan.graph import Graph, join_graphs


def test_named_graphs():
    w = cons.wheel(5)
    assert (w.order, w.edge_count, w.degree(0)) == (5, 8, 4)
    s = cons.star(4)
    assert s.max_degree() == 3 and s.edge_count == 3
    kb = cons.complete_bipartite(2, 3)
    assert kb.edge_count == 6 and kb.is_bipartite()
    assert cons.named_graph("cycle", 5) == cons.cycle(5)
    assert cons.path(1).edge_count == 0


@pytest.mark.parametrize("kind,args", [("wheel", (3,)), ("cycle", (2,)), ("path", (0,)),
                                       ("complete_bipartite", (0, 2)), ("star", (0,))])
def test_named_graph_minimums(kind, args):
    with pytest.raises(DomainError):
        cons.named_graph(kind, *args)


def test_unknown_kind():
    with pytest.raises(DomainError):
        cons.named_graph("petersen")


def test_turan_graph():
    assert cons.turan_graph(6, 3).edge_count == 12
    assert cons.turan_graph(3, 3) == cons.clique(3)
    t = cons.turan_graph(10, 3)
    assert t.edge_count == 33 and sorted(t.degrees()) == [6] * 4 + [7] * 6
    assert not contains_subgraph(t, cons.clique(4))


def test_disjoint_copies():
    assert cons.disjoint_copies(cons.wheel(5), 2).edge_count == 16
    assert cons.disjoint_copies(Graph.empty(1), 5) == Graph.empty(5)
    assert cons.disjoint_copies(cons.clique(3), 3).edge_count == 9
    with pytest.raises(DomainError):
        cons.disjoint_copies(cons.clique(3), 0)


@pytest.mark.parametrize("n,k,edges", [(6, 3, 6), (4, 2, 2), (5, 2, 2)])
def test_near_regular_examples(n, k, edges):
    rep = cons.near_regular_path_free(n, k)
    assert rep.achieved_edges == edges and rep.defect == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 30), st.integers(2, 6))
def test_near_regular_properties(n, k):
    rep = cons.near_regular_path_free(n, k)
    g = rep.graph
    assert g.order == n
    assert g.max_degree() <= k - 1
    assert not contains_path(g, 2 * k - 1)
    assert 0 <= rep.defect
    assert rep.target_edges == (k - 1) * n // 2


def test_near_regular_defect_when_remainder_is_long():
    # 5 vertices, degree <= 2 and 5 edges forces C_5, which contains P_5
    rep = cons.near_regular_path_free(5, 3)
    assert (rep.target_edges, rep.achieved_edges) == (5, 4)


def test_family_small_is_k4():
    rep = cons.extremal_family_graph(cons.FamilyParams(0, 2, 2, 2))
    assert rep.graph == cons.clique(4) and rep.defect == 0


def test_family_layout():
    rep = cons.extremal_family_graph(cons.FamilyParams(1, 6, 4, 3))
    g = rep.graph
    assert rep.defect == 0 and g.edge_count == family_edges(1, 6, 4, 3)
    assert g.degree(0) == 10
    assert g.has_edge(7, 8) and not g.has_edge(9, 10)


def test_family_examples_carry_the_inner_defect():
    # the worked values 31 and 35 assume floor((k-1)n1/2) = 5 edges inside a
    # 5-vertex side, which no P_5-free graph of max degree 2 reaches
    for params, target in [(cons.FamilyParams(0, 5, 5, 3), 31), (cons.FamilyParams(1, 5, 4, 3), 35)]:
        rep = cons.extremal_family_graph(params)
        assert rep.target_edges == target
        assert rep.defect == 1
        assert not WheelForestPattern((7,) * (params.t + 1)).found_in(rep.graph)


def test_family_with_c5_inside_would_contain_w7():
    # putting C_5 inside reaches 31 edges but a hub outside sees a 6-cycle
    inner = cons.cycle(5)
    g = join_graphs(inner, Graph.empty(5).with_edge(0, 1))
    assert g.edge_count == 31
    assert contains_wheel(g, 7)


def test_family_rejects_bad_params():
    with pytest.raises(DomainError):
        cons.FamilyParams(0, 3, 4, 3)
    with pytest.raises(DomainError):
        cons.FamilyParams(0, 3, 1, 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(1, 3), st.integers(2, 12), st.integers(0, 8))
def test_family_is_wheel_forest_free(k, m, n2, extra):
    params = cons.FamilyParams(m - 1, n2 + extra, n2, k)
    rep = cons.extremal_family_graph(params)
    assert rep.achieved_edges == rep.target_edges - rep.defect
    assert not WheelForestPattern((2 * k + 1,) * m).found_in(rep.graph)


@pytest.mark.parametrize("n,h,edges", [(10, 1, 33), (10, 2, 36), (3, 1, 3)])
def test_even_wheel_graph(n, h, edges):
    g = cons.even_wheel_extremal_graph(n, h)
    assert g.edge_count == edges == ex_even_wheel_mix(n, h).value


def test_even_wheel_graph_chromatic_and_free():
    for n in range(4, 13):
        g = cons.even_wheel_extremal_graph(n, 1)
        assert chromatic_number(g) == 3
        for q in range(4, n + 1, 2):
            assert not contains_wheel(g, q)
    with pytest.raises(DomainError):
        cons.even_wheel_extremal_graph(1, 3)
