# -*- coding: utf-8 -*-
"""
Property-based tests on random small graphs.
"""
import pytest

from planarturan import Graph, PatternSpec, contains_w, graph6_decode, graph6_encode, is_planar
from planarturan.search import canonical_form

hypothesis = pytest.importorskip("hypothesis")
from hypothesis import given, settings
from hypothesis import strategies as st


@st.composite
def graphs(draw, max_order=9):
    n = draw(st.integers(min_value=0, max_value=max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def relabelled(draw):
    g = draw(graphs())
    order = draw(st.permutations(range(g.n)))
    return g, g.relabel(order)


patterns = st.builds(PatternSpec, st.integers(0, 3), st.integers(0, 3))


@given(graphs())
def test_handshake(g):
    assert int(g.degrees().sum()) == 2 * g.m


@given(graphs())
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(relabelled())
def test_canonical_form_invariant(pair):
    g, h = pair
    assert canonical_form(g) == canonical_form(h)


@given(relabelled(), patterns)
def test_detection_invariant(pair, p):
    g, h = pair
    assert contains_w(g, p) == contains_w(h, p)


@given(graphs(), patterns)
def test_detection_symmetric(g, p):
    assert contains_w(g, p) == contains_w(g, PatternSpec(p.k, p.h))


@settings(max_examples=50)
@given(graphs(), patterns)
def test_detection_hereditary(g, p):
    """Test that deleting an edge from a W-free graph keeps it W-free"""
    if contains_w(g, p):
        return
    for u, v in g.edges():
        assert not contains_w(g.without_edge(u, v), p)


@settings(max_examples=50)
@given(graphs())
def test_planarity_hereditary(g):
    if not is_planar(g):
        return
    for u, v in g.edges():
        assert is_planar(g.without_edge(u, v))
