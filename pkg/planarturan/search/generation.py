# -*- coding: utf-8 -*-
"""
Isomorph-free generation of graphs by canonical edge augmentation.

Every graph on ``n`` vertices is reached from the edgeless graph by adding one edge at a
time. A graph ``G`` is kept as a child of ``P = G - e`` only when ``e`` is the canonical
deletion of ``G``, or when deleting the canonical edge of ``G`` gives a graph isomorphic
to ``P``. Children of the same parent are deduplicated by canonical form. Each
isomorphism class therefore appears exactly once, and a hereditary filter prunes
whole subtrees.
"""
import logging
from collections import Counter
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from ..graph import Graph, UsageError, empty_graph
from ..patterns import PatternSpec, is_free
from ..planarity import EulerVerdict, euler_filter, is_planar
from .canonical import CanonicalForm, canonical_labeling
from .common import MAX_SEARCH_ORDER, BudgetTracker

log = logging.getLogger(__name__)

Predicate = Callable[[Graph], bool]


class HereditaryFilter:
    """
    Conjunction of named graph predicates, each closed under edge deletion.
    Rejections are counted per rule in :attr:`rejections`.

    Parameters
    ----------
    rules : iterable of (str, callable)
        Named predicates, tried in order.
    """

    def __init__(self, rules: Iterable[Tuple[str, Predicate]]):
        self.rules = list(rules)
        self.rejections = Counter()

    def __call__(self, g: Graph) -> bool:
        for name, rule in self.rules:
            if not rule(g):
                self.rejections[name] += 1
                return False
        return True

    def __repr__(self) -> str:
        return f"< HereditaryFilter: {', '.join(name for name, _ in self.rules)} >"


def planar_filter() -> HereditaryFilter:
    return HereditaryFilter(
        [
            ("euler", lambda g: euler_filter(g) is EulerVerdict.inconclusive),
            ("planarity", is_planar),
        ]
    )


def planar_free_filter(p: PatternSpec) -> HereditaryFilter:
    """Planar and W_{h,k}-free graphs."""
    return HereditaryFilter(
        planar_filter().rules + [("pattern", lambda g: is_free(g, p))]
    )


def free_filter(p: PatternSpec) -> HereditaryFilter:
    return HereditaryFilter([("pattern", lambda g: is_free(g, p))])


def _edge_key(degrees: List[int], position: List[int], u: int, v: int):
    du, dv = degrees[u], degrees[v]
    pu, pv = position[u], position[v]
    return (max(du, dv), min(du, dv), max(pu, pv), min(pu, pv))


def _invariant(degrees: List[int], u: int, v: int) -> Tuple[int, int]:
    return (max(degrees[u], degrees[v]), min(degrees[u], degrees[v]))


def children(
    parent: Graph,
    parent_form: CanonicalForm,
    accept: Predicate,
    stats: Optional[Counter] = None,
) -> Tuple[List[Tuple[Graph, CanonicalForm]], int]:
    """
    Canonical children of a node of the augmentation tree.

    Parameters
    ----------
    parent : Graph
        Parent graph, in canonical labeling.
    parent_form : CanonicalForm
        Canonical form of ``parent``.
    accept : callable
        Hereditary filter.
    stats : Counter or None, optional
        Incremented with ``"noncanonical"`` and ``"duplicate"`` rejections.

    Returns
    -------
    children : list of (Graph, CanonicalForm)
        Canonically labelled children, in increasing order of canonical form.
    addable : int
        Number of non-edges whose addition passes the filter.
    """
    stats = stats if stats is not None else Counter()
    found = dict()
    addable = 0
    for u, v in parent.non_edges():
        child = parent.with_edge(u, v)
        degrees = [mask.bit_count() for mask in child.adjacency]
        if not accept(child):
            continue
        addable += 1

        # cheap rejection: the canonical deletion has the largest degree invariant
        invariant = _invariant(degrees, u, v)
        if any(_invariant(degrees, a, b) > invariant for a, b in child.edges()):
            stats["noncanonical"] += 1
            continue

        form, order = canonical_labeling(child)
        position = [0] * child.n
        for index, vertex in enumerate(order):
            position[vertex] = index
        deletion = max(child.edges(), key=lambda e: _edge_key(degrees, position, *e))
        if deletion != (u, v):
            reduced, _ = canonical_labeling(child.without_edge(*deletion))
            if reduced != parent_form:
                stats["noncanonical"] += 1
                continue
        if form in found:
            stats["duplicate"] += 1
            continue
        found[form] = child.relabel(order)
    return [(found[form], form) for form in sorted(found)], addable


def walk(
    root: Graph,
    accept: Predicate,
    tracker: Optional[BudgetTracker] = None,
    stats: Optional[Counter] = None,
    max_edges: Optional[int] = None,
    min_edges: Optional[int] = None,
) -> Iterator[Tuple[Graph, CanonicalForm]]:
    """
    Depth-first traversal of the augmentation tree below ``root``, root included.
    The root must pass ``accept``.

    Parameters
    ----------
    root : Graph
    accept : callable
        Hereditary filter.
    tracker : BudgetTracker or None, optional
        Stops the traversal once exhausted.
    stats : Counter or None, optional
        Rejection counts.
    max_edges : int or None, optional
        Nodes with this many edges are not expanded.
    min_edges : int or None, optional
        Subtrees that cannot reach this many edges are pruned.
    """
    tracker = tracker or BudgetTracker()
    stats = stats if stats is not None else Counter()
    form, order = canonical_labeling(root)
    stack = [(root.relabel(order), form)]
    while stack:
        graph, form = stack.pop()
        if not tracker.tick():
            log.debug("Search budget exhausted after %d nodes", tracker.nodes)
            return
        yield graph, form
        if max_edges is not None and graph.m >= max_edges:
            continue
        kids, addable = children(graph, form, accept, stats)
        if min_edges is not None and graph.m + addable < min_edges:
            stats["bound"] += 1
            continue
        # reversed so that children are visited in increasing canonical order
        stack.extend(reversed(kids))


def enumerate_graphs(n: int, filter: Optional[Predicate] = None) -> Iterator[Graph]:
    """
    Generate one representative per isomorphism class of graphs on ``n`` vertices.

    Parameters
    ----------
    n : int
        Number of vertices, at most 10.
    filter : callable or None, optional
        Hereditary predicate (closed under edge deletion), for example
        :func:`planar_free_filter`. Only graphs passing the filter are generated.

    Yields
    ------
    graph : Graph
        Canonically labelled representatives.

    Raises
    ------
    UsageError
        If ``n`` is negative or larger than 10.

    Examples
    --------
    >>> sum(1 for _ in enumerate_graphs(4))
    11
    """
    if not (0 <= n <= MAX_SEARCH_ORDER):
        raise UsageError(f"Enumeration is limited to 0..{MAX_SEARCH_ORDER} vertices, got {n}")
    accept = filter or (lambda g: True)
    root = empty_graph(n)
    if not accept(root):
        return
    for graph, _ in walk(root, accept):
        yield graph
