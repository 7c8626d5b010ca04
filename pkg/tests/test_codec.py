import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from wheelturan.codec import (
    canonical_form, canonical_labelling, decode_graph6, dedup_isomorphic, encode_graph6,
    is_isomorphic,
)
from wheelturan.constructions import clique, cycle, path, wheel
from wheelturan.errors import CapacityError, Graph6Error
from wheelturan.graph import Graph

from .conftest import graphs


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_known_encodings():
    assert encode_graph6(clique(3)) == b"Bw"
    assert encode_graph6(Graph.empty(5)) == b"D??"
    assert encode_graph6(Graph.empty(0)) == b"?"
    assert decode_graph6("Bw") == clique(3)


@given(graphs(max_order=20))
def test_bytes_match_networkx(g):
    assert encode_graph6(g) == nx.to_graph6_bytes(_to_nx(g), header=False).strip()


def test_long_header():
    g = cycle(70)
    data = encode_graph6(g)
    assert data.startswith(b"~")
    assert decode_graph6(data) == g


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("B", 1),        # payload too short
    ("Bx", 1),       # nonzero padding bits
    ("B\x7f", 1),    # byte out of range
    ("Bww", 2),      # trailing data
])
def test_decode_errors_report_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        decode_graph6(text)
    assert info.value.offset == offset


def test_canonical_form_invariant_under_relabelling():
    g = wheel(6)
    forms = {canonical_form(g.relabel(p)) for p in itertools.permutations(range(6))}
    assert len(forms) == 1


@settings(max_examples=60)
@given(graphs(max_order=7), graphs(max_order=7))
def test_isomorphism_agrees_with_networkx(g, h):
    if g.order == h.order:
        assert is_isomorphic(g, h) == nx.is_isomorphic(_to_nx(g), _to_nx(h))


@given(graphs(max_order=8))
def test_canonical_labelling_is_permutation(g):
    order = canonical_labelling(g)
    assert sorted(order) == list(range(g.order))
    perm = [0] * g.order
    for pos, v in enumerate(order):
        perm[v] = pos
    assert encode_graph6(g.relabel(perm)) == canonical_form(g)


def test_class_counts_up_to_five():
    # numbers of unlabelled graphs: 1, 1, 2, 4, 11, 34
    for n, expected in enumerate([1, 1, 2, 4, 11, 34]):
        pairs = list(itertools.combinations(range(n), 2))
        labelled = (Graph.from_edges(n, (e for i, e in enumerate(pairs) if mask >> i & 1))
                    for mask in range(1 << len(pairs)))
        assert len(dedup_isomorphic(labelled)) == expected


def test_canonical_cap():
    with pytest.raises(CapacityError):
        canonical_form(path(10))
    canonical_form(clique(9))
