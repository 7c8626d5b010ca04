import pytest
from hypothesis import given, settings, strategies as st

from wheelturan import constructions as cons
from wheelturan.detect import (
    GenericPattern, StarForestPattern, WheelForestPattern, chromatic_number, clique_number,
    contains_cycle, contains_path, contains_star_forest, contains_subgraph, contains_wheel,
    contains_wheel_forest, embeds_through_edge, is_colorable, parse_pattern,
)
from wheelturan.errors import BudgetExceeded, CapacityError, DomainError
from wheelturan.graph import Graph

from .conftest import graphs


def blow_up(g: Graph, sizes, true_twins) -> Graph:
    """Replace vertex v by sizes[v] twins (adjacent to each other if true_twins[v])."""
    start, offs = 0, []
    for s in sizes:
        offs.append(start)
        start += s
    edges = []
    for v in range(g.order):
        if true_twins[v]:
            edges += [(offs[v] + i, offs[v] + j) for i in range(sizes[v]) for j in range(i + 1, sizes[v])]
    for u, v in g.edges():
        edges += [(offs[u] + i, offs[v] + j) for i in range(sizes[u]) for j in range(sizes[v])]
    return Graph.from_edges(start, edges)


@st.composite
def twin_rich(draw):
    base = draw(graphs(max_order=5, min_order=1))
    sizes = draw(st.lists(st.integers(1, 3), min_size=base.order, max_size=base.order))
    tt = draw(st.lists(st.booleans(), min_size=base.order, max_size=base.order))
    return blow_up(base, sizes, tt)


test_graphs = st.one_of(graphs(max_order=10), twin_rich())


def test_paths_and_cycles():
    c6 = cons.cycle(6)
    assert contains_path(c6, 6) and not contains_path(c6, 7)
    assert contains_cycle(c6, 6) and not contains_cycle(c6, 5) and not contains_cycle(c6, 4)
    assert contains_path(cons.path(1), 1)
    assert contains_cycle(cons.clique(5), 5)


def test_wheels():
    assert contains_wheel(cons.wheel(7), 7)
    assert not contains_wheel(cons.wheel(7), 6)
    assert contains_wheel(cons.clique(6), 6)
    assert not contains_wheel(cons.turan_graph(12, 3), 4)
    assert contains_wheel(cons.turan_graph(12, 3), 5)


def test_wheel_forests():
    two = cons.disjoint_copies(cons.wheel(5), 2)
    assert contains_wheel_forest(two, [5, 5])
    assert not contains_wheel_forest(two, [5, 5, 5])
    assert not contains_wheel_forest(cons.wheel(9), [5, 5])
    # W_9 minus nothing shares the hub; two wheels need two hubs
    k9 = cons.clique(9)
    assert contains_wheel_forest(k9, [5, 4])
    assert not contains_wheel_forest(k9, [5, 5])


def test_star_forests():
    g = cons.star(5)
    assert contains_star_forest(g, [4]) and not contains_star_forest(g, [2, 1])
    assert contains_star_forest(cons.path(5), [2, 1])
    assert not contains_star_forest(cons.path(4), [2, 1])


@settings(max_examples=150, deadline=None)
@given(test_graphs, st.integers(3, 6))
def test_path_cycle_match_generic(g, q):
    assert contains_path(g, q) == contains_subgraph(g, cons.path(q))
    assert contains_cycle(g, q) == contains_subgraph(g, cons.cycle(q))


@settings(max_examples=150, deadline=None)
@given(test_graphs, st.integers(4, 7))
def test_wheel_matches_generic(g, q):
    assert contains_wheel(g, q) == contains_subgraph(g, cons.wheel(q))


@settings(max_examples=100, deadline=None)
@given(st.one_of(graphs(max_order=11, min_order=8), twin_rich()),
       st.lists(st.integers(4, 5), min_size=2, max_size=2))
def test_wheel_forest_matches_generic(g, orders):
    p = WheelForestPattern(tuple(orders))
    assert p.found_in(g) == contains_subgraph(g, p.graph())


@settings(max_examples=150, deadline=None)
@given(test_graphs, st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_star_forest_matches_generic(g, degrees):
    p = StarForestPattern(tuple(sorted(degrees, reverse=True)))
    assert p.found_in(g) == contains_subgraph(g, p.graph())


@settings(max_examples=100, deadline=None)
@given(graphs(max_order=8, min_order=2), st.sampled_from(["K3", "C4", "P4", "W5", "K2,3"]))
def test_embeds_through_edge(g, spec):
    p = parse_pattern(spec).graph()
    for u, v in g.edges():
        without = g.without_edge(u, v)
        through = embeds_through_edge(g.rows, g.order, p, u, v)
        if contains_subgraph(g, p) and not contains_subgraph(without, p):
            assert through
        if through:
            assert contains_subgraph(g, p)


def test_budget():
    g = cons.turan_graph(18, 3)
    with pytest.raises(BudgetExceeded):
        contains_wheel_forest(g, [6, 6], budget=5)
    with pytest.raises(BudgetExceeded):
        contains_subgraph(g, cons.clique(4), budget=50)
    assert not contains_subgraph(g, cons.clique(4))


def test_parse_pattern():
    assert parse_pattern("W7+W5") == WheelForestPattern((7, 5))
    assert parse_pattern("S4+S3") == StarForestPattern((3, 2))
    assert str(parse_pattern("S3+S4")) == "S4+S3"
    assert parse_pattern("K3").graph() == cons.clique(3)
    assert parse_pattern("K2,3").graph().edge_count == 6
    assert parse_pattern("g6:Bw").graph() == cons.clique(3)
    mixed = parse_pattern("K3+W5")
    assert isinstance(mixed, GenericPattern) and mixed.graph().order == 8
    with pytest.raises(DomainError):
        parse_pattern("Q7")
    with pytest.raises(DomainError):
        WheelForestPattern((3,))
    with pytest.raises(DomainError):
        StarForestPattern((1, 2))


@pytest.mark.parametrize("g,chi", [
    (cons.wheel(6), 4), (cons.wheel(7), 3), (cons.clique(5), 5), (cons.cycle(5), 3),
    (cons.path(4), 2), (Graph.empty(3), 1), (Graph.empty(0), 0),
    (cons.turan_graph(9, 3), 3),
])
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi


def test_colouring_helpers():
    # the Grötzsch graph (Mycielski of C5) has omega 2 but chi 4
    c5 = cons.cycle(5)
    edges = list(c5.edges())
    edges += [(u, v + 5) for u, v in c5.edges()] + [(v, u + 5) for u, v in c5.edges()]
    edges += [(i + 5, 10) for i in range(5)]
    myc = Graph.from_edges(11, edges)
    assert clique_number(myc) == 2
    assert not is_colorable(myc, 3) and is_colorable(myc, 4)
    with pytest.raises(CapacityError):
        chromatic_number(cons.clique(17))
