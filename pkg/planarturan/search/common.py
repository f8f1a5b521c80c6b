# -*- coding: utf-8 -*-
"""
Basic definitions common to all search engines.
"""
import time
import warnings
from dataclasses import dataclass, field
from os import environ
from typing import Dict, Optional

from ..graph import Graph

THREADS_ENV = "PLANAR_TURAN_THREADS"

# Exhaustive enumeration and exact search are limited to desk-scale orders
MAX_SEARCH_ORDER = 10


class SearchError(RuntimeError):
    """Raised when a search is misconfigured, for example with an unknown engine."""

    pass


def default_threads() -> int:
    """
    Default number of worker processes, read from the ``PLANAR_TURAN_THREADS``
    environment variable. Invalid values fall back to 1.
    """
    value = environ.get(THREADS_ENV)
    if value is None:
        return 1
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        warnings.warn(f"Ignoring invalid {THREADS_ENV}={value!r}; using 1 thread", UserWarning)
        return 1
    return threads


@dataclass(frozen=True)
class SearchBudget:
    """
    Limits on a search. ``None`` means unlimited.

    Parameters
    ----------
    max_nodes : int or None, optional
        Maximum number of search-tree nodes to expand.
    max_seconds : float or None, optional
        Maximum wall time, in seconds.
    """

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def deadline(self, start: float) -> Optional[float]:
        if self.max_seconds is None:
            return None
        return start + self.max_seconds

    def split(self, parts: int) -> "SearchBudget":
        """Budget for one of ``parts`` workers sharing this budget."""
        if self.max_nodes is None:
            return self
        return SearchBudget(max(1, self.max_nodes // max(parts, 1)), self.max_seconds)


class BudgetTracker:
    """Counts expanded nodes and tells when a budget is exhausted."""

    def __init__(self, budget: Optional[SearchBudget] = None, deadline: Optional[float] = None):
        self.budget = budget or SearchBudget()
        self.deadline = deadline if deadline is not None else self.budget.deadline(time.monotonic())
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> bool:
        """Record one node. Returns False once the budget is exhausted."""
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            self.exhausted = True
        elif self.deadline is not None and self.nodes % 64 == 0 and time.monotonic() > self.deadline:
            self.exhausted = True
        return not self.exhausted


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of an extremal search.

    Parameters
    ----------
    n, h, k : int
        Host order and pattern parameters.
    value : int
        Largest edge count found.
    witness : Graph
        Graph attaining ``value``; the one with the least canonical form.
    exact : bool
        False if the search budget ran out, in which case ``value`` is only a lower bound.
    nodes_explored : int
    wall_time : float
        Duration in seconds.
    pruning : dict
        Number of rejected candidates per rule.
    engine : str
    bound_consistent : bool or None
        Whether ``value`` respects ``3n - 6`` and the known upper bound; ``None`` when
        no bound is known for ``(h, k)``.
    """

    n: int
    h: int
    k: int
    value: int
    witness: Graph
    exact: bool = True
    nodes_explored: int = 0
    wall_time: float = 0.0
    pruning: Dict[str, int] = field(default_factory=dict)
    engine: str = "augment"
    bound_consistent: Optional[bool] = None

    def __repr__(self) -> str:
        qualifier = "exact" if self.exact else "partial"
        return f"< SearchResult ({qualifier}) n={self.n}, W_{{{self.h},{self.k}}}: {self.value} edges >"

    def as_dict(self) -> dict:
        """Search statistics, as embedded in certificates."""
        return {
            "value": self.value,
            "exact": self.exact,
            "engine": self.engine,
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
            "pruning": dict(sorted(self.pruning.items())),
            "bound_consistent": self.bound_consistent,
        }
