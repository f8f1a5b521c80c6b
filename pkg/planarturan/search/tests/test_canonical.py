# -*- coding: utf-8 -*-
import numpy as np
import pytest

from planarturan import (
    Graph,
    UsageError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    icosahedron,
    path_graph,
    star_graph,
    wheel_graph,
)
from planarturan.search import CanonicalForm, canonical_form, canonical_graph, canonical_labeling

try:
    import networkx as nx
except ImportError:
    WITH_NETWORKX = False
else:
    WITH_NETWORKX = True


def shuffled(g, seed):
    rng = np.random.default_rng(seed)
    return g.relabel([int(v) for v in rng.permutation(g.n)])


@pytest.mark.parametrize(
    "g", [path_graph(6), wheel_graph(7), icosahedron(), disjoint_union([cycle_graph(4), star_graph(3)])]
)
def test_relabel_invariance(g):
    """Test that the canonical form does not depend on vertex labels"""
    form = canonical_form(g)
    for seed in range(5):
        assert canonical_form(shuffled(g, seed)) == form


def test_non_isomorphic():
    """Test graphs that refinement alone cannot tell apart"""
    assert canonical_form(cycle_graph(6)) != canonical_form(disjoint_union([complete_graph(3)] * 2))
    assert canonical_form(path_graph(3)) != canonical_form(complete_graph(3))
    assert canonical_form(Graph.from_edges(4, [(0, 1)])) != canonical_form(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_canonical_graph():
    g = shuffled(wheel_graph(6), 3)
    representative = canonical_graph(g)
    assert representative == canonical_form(g).graph()
    assert canonical_graph(representative) == representative


def test_canonical_labeling():
    """Test that the labeling relabels the graph into its canonical representative"""
    g = shuffled(icosahedron(), 1)
    form, order = canonical_labeling(g)
    assert sorted(order) == list(range(12))
    assert g.relabel(order) == form.graph()


def test_form_bits():
    form = canonical_form(complete_graph(3))
    assert form == CanonicalForm(3, form.rows)
    assert form.bits == "111"
    assert canonical_form(Graph.from_edges(0, [])).bits == ""


def test_order_limit():
    with pytest.raises(UsageError):
        canonical_form(path_graph(17))


def random_graph(rng, n, density):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


@pytest.mark.skipif(not WITH_NETWORKX, reason="networkx is not installed")
def test_against_networkx():
    """Test that equal canonical forms coincide with isomorphism, as decided by networkx"""
    rng = np.random.default_rng(11)
    for _ in range(200):
        n = int(rng.integers(1, 8))
        g1, g2 = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        if g1.m != g2.m:
            continue
        reference = nx.is_isomorphic(nx.from_numpy_array(np.array(g1)), nx.from_numpy_array(np.array(g2)))
        assert (canonical_form(g1) == canonical_form(g2)) == reference
