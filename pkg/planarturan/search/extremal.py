# -*- coding: utf-8 -*-
"""
Exact planar Turán numbers of quasi-double stars for small orders.

Two engines are provided:

* ``augment`` walks the whole augmentation tree of planar W_{h,k}-free graphs and keeps
  the densest graphs. The top levels of the tree are expanded first and the resulting
  subtrees are distributed over worker processes.
* ``descend`` tests, for ``m = 3n - 6, 3n - 7, ...``, whether some planar W_{h,k}-free graph
  has ``m`` edges, pruning subtrees that cannot reach ``m`` edges.

Known upper bounds are compared with the result only after the search; they never prune.
"""
import logging
import time
import warnings
from collections import Counter
from multiprocessing import Pool
from typing import List, Optional, Tuple

from ..constructions import UnsupportedRangeError, bounds_for
from ..graph import Graph, UsageError, empty_graph
from ..patterns import PatternSpec
from .canonical import CanonicalForm, canonical_labeling
from .common import (
    MAX_SEARCH_ORDER,
    BudgetTracker,
    SearchBudget,
    SearchError,
    SearchResult,
    default_threads,
)
from .generation import children, planar_free_filter, walk

log = logging.getLogger(__name__)

ENGINES = ("augment", "descend")

# Expand at least this many levels before distributing subtrees over workers
SPLIT_LEVELS = 2


def max_planar_edges(n: int) -> int:
    """Largest edge count of a planar graph on ``n`` vertices."""
    if n >= 3:
        return 3 * n - 6
    return n * (n - 1) // 2


class _Best:
    """Densest graph seen so far; ties go to the least canonical form."""

    def __init__(self):
        self.value = -1
        self.form: Optional[CanonicalForm] = None

    def offer(self, value: int, form: CanonicalForm) -> None:
        if value > self.value or (value == self.value and form < self.form):
            self.value, self.form = value, form

    def merge(self, other: Tuple[int, Optional[CanonicalForm]]) -> None:
        value, form = other
        if form is not None:
            self.offer(value, form)


def _explore_subtree(task):
    """Worker: exhaust the augmentation subtree below one canonical graph."""
    graph, h, k, budget, deadline = task
    accept = planar_free_filter(PatternSpec(h, k))
    tracker = BudgetTracker(budget, deadline=deadline)
    stats = Counter()
    best = _Best()
    for g, form in walk(graph, accept, tracker=tracker, stats=stats):
        best.offer(g.m, form)
    stats.update(accept.rejections)
    return best.value, best.form, tracker.nodes, tracker.exhausted, dict(stats)


def _augment(n: int, p: PatternSpec, budget: SearchBudget, threads: int, deadline):
    accept = planar_free_filter(p)
    stats = Counter()
    best = _Best()
    tracker = BudgetTracker(budget, deadline=deadline)

    root = empty_graph(n)
    root_form = canonical_labeling(root)[0]
    if threads <= 1:
        for g, form in walk(root, accept, tracker=tracker, stats=stats):
            best.offer(g.m, form)
        stats.update(accept.rejections)
        return best, tracker.nodes, tracker.exhausted, stats

    # Expand the top levels sequentially; their nodes are counted here
    frontier: List[Tuple[Graph, CanonicalForm]] = [(root, root_form)]
    level = 0
    while frontier and (level < SPLIT_LEVELS or len(frontier) < 4 * threads):
        expanded = list()
        for graph, form in frontier:
            tracker.tick()
            best.offer(graph.m, form)
            kids, _ = children(graph, form, accept, stats)
            expanded.extend(kids)
        frontier = expanded
        level += 1
    stats.update(accept.rejections)
    log.info("Distributing %d subtrees over %d workers", len(frontier), threads)

    sub_budget = budget.split(len(frontier))
    tasks = [(graph, p.h, p.k, sub_budget, deadline) for graph, _ in frontier]
    exhausted = tracker.exhausted
    nodes = tracker.nodes
    with Pool(processes=threads) as pool:
        for value, form, count, ran_out, worker_stats in pool.imap_unordered(_explore_subtree, tasks):
            best.merge((value, form))
            nodes += count
            exhausted = exhausted or ran_out
            stats.update(worker_stats)
    return best, nodes, exhausted, stats


def _descend(n: int, p: PatternSpec, budget: SearchBudget, deadline):
    accept = planar_free_filter(p)
    stats = Counter()
    tracker = BudgetTracker(budget, deadline=deadline)
    root = empty_graph(n)
    # densest graph visited so far, reported if the budget runs out
    seen = _Best()

    for target in range(max_planar_edges(n), -1, -1):
        best = _Best()
        for g, form in walk(root, accept, tracker=tracker, stats=stats, max_edges=target, min_edges=target):
            seen.offer(g.m, form)
            if g.m == target:
                best.offer(g.m, form)
        if tracker.exhausted:
            log.debug("Descending search stopped at %d edges", target)
            break
        if best.form is not None:
            log.debug("Found %d edges", target)
            stats.update(accept.rejections)
            return best, tracker.nodes, False, stats
        log.debug("No planar W-free graph with %d edges", target)

    stats.update(accept.rejections)
    return seen, tracker.nodes, True, stats


def exact_ex(
    n: int,
    h: int,
    k: int,
    budget: Optional[SearchBudget] = None,
    engine: str = "augment",
    threads: Optional[int] = None,
) -> SearchResult:
    """
    Maximum number of edges of a planar W_{h,k}-free graph on ``n`` vertices, by
    exhaustive isomorph-free search.

    Parameters
    ----------
    n : int
        Number of vertices, ``1 <= n <= 10``.
    h, k : int
        Pattern parameters.
    budget : SearchBudget or None, optional
        Node and time limits. If exhausted, the result is flagged as not exact.
    engine : {"augment", "descend"}, optional
        Search engine.
    threads : int or None, optional
        Number of worker processes for the ``augment`` engine. Defaults to the
        ``PLANAR_TURAN_THREADS`` environment variable, or 1.

    Returns
    -------
    result : SearchResult
        The value does not depend on ``threads``; neither does the witness, which is
        the densest graph with the least canonical form.

    Raises
    ------
    UsageError
        If ``n`` is out of range.
    SearchError
        If the engine is unknown.

    Examples
    --------
    >>> exact_ex(5, 1, 2).value
    9
    """
    if not (1 <= n <= MAX_SEARCH_ORDER):
        raise UsageError(f"Exact search is limited to 1..{MAX_SEARCH_ORDER} vertices, got {n}")
    if engine not in ENGINES:
        raise SearchError(f"Unknown engine {engine!r}; expected one of {', '.join(ENGINES)}")
    budget = budget or SearchBudget()
    threads = default_threads() if threads is None else max(1, int(threads))
    p = PatternSpec(h, k)

    start = time.monotonic()
    deadline = budget.deadline(start)
    if engine == "augment":
        best, nodes, exhausted, stats = _augment(n, p, budget, threads, deadline)
    else:
        best, nodes, exhausted, stats = _descend(n, p, budget, deadline)
    elapsed = time.monotonic() - start

    witness = best.form.graph() if best.form is not None else empty_graph(n)
    value = max(best.value, 0)
    if exhausted:
        warnings.warn(
            f"Search budget exhausted for n={n}, {p}; {value} edges is only a lower bound",
            UserWarning,
        )

    normalized = p.normalized()
    try:
        bounds = bounds_for(normalized.h, normalized.k, n)
    except UnsupportedRangeError:
        consistent = value <= max_planar_edges(n)
    else:
        consistent = value <= min(max_planar_edges(n), bounds.upper_floor)
    if consistent is False:
        warnings.warn(
            f"Search found {value} edges for n={n}, {p}, above the known upper bound",
            UserWarning,
        )

    log.info("%s, n=%d: %d edges (%d nodes, %.2f s, %s)", p, n, value, nodes, elapsed, engine)
    return SearchResult(
        n=n,
        h=h,
        k=k,
        value=value,
        witness=witness,
        exact=not exhausted,
        nodes_explored=nodes,
        wall_time=elapsed,
        pruning=dict(stats),
        engine=engine,
        bound_consistent=consistent,
    )
