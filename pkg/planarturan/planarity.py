# -*- coding: utf-8 -*-
"""
Planarity testing and triangulations.
"""
from collections import deque
from enum import Enum, unique
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np

from .graph import Graph, UsageError, iter_bits

Edge = Tuple[int, int]


@unique
class EulerVerdict(Enum):
    """Outcome of the edge-count filter derived from Euler's formula."""

    nonplanar = "nonplanar"
    inconclusive = "inconclusive"


def euler_filter(g: Graph) -> EulerVerdict:
    """
    Quick planarity filter from edge counts: a planar graph on ``n >= 3`` vertices has at most
    ``3n - 6`` edges, and at most ``2n - 4`` edges if it is bipartite.

    Parameters
    ----------
    g : Graph
        Graph to test.

    Returns
    -------
    verdict : EulerVerdict
        ``EulerVerdict.nonplanar`` if one of the bounds is exceeded, ``EulerVerdict.inconclusive`` otherwise.
    """
    n, m = g.n, g.m
    if n < 3:
        return EulerVerdict.inconclusive
    if m > 3 * n - 6:
        return EulerVerdict.nonplanar
    if m > 2 * n - 4 and g.is_bipartite():
        return EulerVerdict.nonplanar
    return EulerVerdict.inconclusive


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: Optional[Edge] = None, high: Optional[Edge] = None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)

    def conflicting(self, edge: Edge, lowpt: Dict[Edge, int]) -> bool:
        return not self.empty() and lowpt[self.high] > lowpt[edge]


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left: Optional[_Interval] = None, right: Optional[_Interval] = None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left

    def lowest(self, lowpt: Dict[Edge, int]) -> int:
        if self.left.empty():
            return lowpt[self.right.low]
        if self.right.empty():
            return lowpt[self.left.low]
        return min(lowpt[self.left.low], lowpt[self.right.low])


class _LeftRightTest:
    """
    Left-right planarity criterion. The first pass orients the graph along a depth-first
    search and computes lowpoints; the second pass maintains a stack of conflict pairs
    of return-edge intervals and fails as soon as two intervals must sit on the same side.
    Both depth-first passes keep explicit stacks, so long paths do not exhaust the
    interpreter stack.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.height: List[Optional[int]] = [None] * g.n
        self.parent_edge: List[Optional[Edge]] = [None] * g.n
        self.children: List[List[int]] = [list() for _ in range(g.n)]
        self.lowpt: Dict[Edge, int] = dict()
        self.lowpt2: Dict[Edge, int] = dict()
        self.nesting_depth: Dict[Edge, int] = dict()
        self.ref: Dict[Optional[Edge], Optional[Edge]] = dict()
        self.lowpt_edge: Dict[Optional[Edge], Edge] = dict()
        self.stack_bottom: Dict[Edge, Optional[_ConflictPair]] = dict()
        self.stack: List[_ConflictPair] = list()
        self.adjs = [list(iter_bits(g.adjacency[v])) for v in range(g.n)]
        self.orient_index = [0] * g.n

    def run(self) -> bool:
        roots = list()
        for v in range(self.g.n):
            if self.height[v] is None:
                self.height[v] = 0
                roots.append(v)
                self._orient(v)

        self.ordered = [
            sorted(self.children[v], key=lambda w, v=v: self.nesting_depth[(v, w)])
            for v in range(self.g.n)
        ]
        for root in roots:
            self.stack = list()
            if not self._test(root):
                return False
        return True

    def _orient(self, root: int) -> None:
        adjs, index = self.adjs, self.orient_index
        # tree edges already descended into
        descended = set()
        dfs_stack = [root]
        while dfs_stack:
            v = dfs_stack.pop()
            e = self.parent_edge[v]
            for w in adjs[v][index[v]:]:
                vw = (v, w)
                if vw not in descended:
                    if vw in self.lowpt or (w, v) in self.lowpt:
                        index[v] += 1
                        continue
                    self.children[v].append(w)
                    self.lowpt[vw] = self.height[v]
                    self.lowpt2[vw] = self.height[v]
                    if self.height[w] is None:  # tree edge
                        self.parent_edge[w] = vw
                        self.height[w] = self.height[v] + 1
                        dfs_stack.append(v)
                        dfs_stack.append(w)
                        descended.add(vw)
                        break
                    # back edge
                    self.lowpt[vw] = self.height[w]

                self.nesting_depth[vw] = 2 * self.lowpt[vw]
                if self.lowpt2[vw] < self.height[v]:  # chordal
                    self.nesting_depth[vw] += 1

                if e is not None:
                    if self.lowpt[vw] < self.lowpt[e]:
                        self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                        self.lowpt[e] = self.lowpt[vw]
                    elif self.lowpt[vw] > self.lowpt[e]:
                        self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                    else:
                        self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])
                index[v] += 1

    def _top(self) -> Optional[_ConflictPair]:
        return self.stack[-1] if self.stack else None

    def _test(self, root: int) -> bool:
        index = [0] * self.g.n
        descended = set()
        dfs_stack = [root]
        while dfs_stack:
            v = dfs_stack.pop()
            e = self.parent_edge[v]
            suspended = False
            for w in self.ordered[v][index[v]:]:
                ei = (v, w)
                if ei not in descended:
                    self.stack_bottom[ei] = self._top()
                    if ei == self.parent_edge[w]:  # tree edge
                        dfs_stack.append(v)
                        dfs_stack.append(w)
                        descended.add(ei)
                        suspended = True
                        break
                    # back edge
                    self.lowpt_edge[ei] = ei
                    self.stack.append(_ConflictPair(right=_Interval(ei, ei)))

                if self.lowpt[ei] < self.height[v]:
                    if index[v] == 0:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
                index[v] += 1

            if not suspended and e is not None:
                self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: Edge, e: Edge) -> bool:
        lowpt = self.lowpt
        pair = _ConflictPair()

        # merge return edges of ei into the right interval
        while True:
            q = self.stack.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                return False
            if lowpt[q.right.low] > lowpt[e]:
                if pair.right.empty():
                    pair.right = q.right.copy()
                else:
                    self.ref[pair.right.low] = q.right.high
                pair.right.low = q.right.low
            else:
                self.ref[q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break

        # merge conflicting return edges of earlier siblings into the left interval
        while self.stack and (
            self._top().left.conflicting(ei, lowpt) or self._top().right.conflicting(ei, lowpt)
        ):
            q = self.stack.pop()
            if q.right.conflicting(ei, lowpt):
                q.swap()
            if q.right.conflicting(ei, lowpt):
                return False
            self.ref[pair.right.low] = q.right.high
            if q.right.low is not None:
                pair.right.low = q.right.low
            if pair.left.empty():
                pair.left = q.left.copy()
            else:
                self.ref[pair.left.low] = q.left.high
            pair.left.low = q.left.low

        if not (pair.left.empty() and pair.right.empty()):
            self.stack.append(pair)
        return True

    def _remove_back_edges(self, e: Edge) -> None:
        u = e[0]
        while self.stack and self._top().lowest(self.lowpt) == self.height[u]:
            self.stack.pop()

        if self.stack:
            pair = self.stack.pop()
            while pair.left.high is not None and pair.left.high[1] == u:
                pair.left.high = self.ref.get(pair.left.high)
            if pair.left.high is None and pair.left.low is not None:
                self.ref[pair.left.low] = pair.right.low
                pair.left.low = None

            while pair.right.high is not None and pair.right.high[1] == u:
                pair.right.high = self.ref.get(pair.right.high)
            if pair.right.high is None and pair.right.low is not None:
                self.ref[pair.right.low] = pair.left.low
                pair.right.low = None
            self.stack.append(pair)

        # the side of e is the side of a highest return edge
        if self.lowpt[e] < self.height[u] and self.stack:
            high_left = self._top().left.high
            high_right = self._top().right.high
            if high_left is not None and (
                high_right is None or self.lowpt[high_left] > self.lowpt[high_right]
            ):
                self.ref[e] = high_left
            else:
                self.ref[e] = high_right


def is_planar(g: Graph) -> bool:
    """
    Determine whether a graph admits a planar embedding, using the left-right criterion.

    Parameters
    ----------
    g : Graph
        Graph to test.

    Returns
    -------
    planar : bool

    Examples
    --------
    >>> from planarturan import complete_graph
    >>> is_planar(complete_graph(4)), is_planar(complete_graph(5))
    (True, False)
    """
    if euler_filter(g) is EulerVerdict.nonplanar:
        return False
    if g.n <= 4:
        return True
    return _LeftRightTest(g).run()


def _has_k5_subgraph(g: Graph) -> bool:
    for chosen in combinations(range(g.n), 5):
        mask = sum(1 << v for v in chosen)
        if all((g.adjacency[v] & mask).bit_count() == 4 for v in chosen):
            return True
    return False


def _has_k33_subgraph(g: Graph) -> bool:
    for chosen in combinations(range(g.n), 6):
        first = chosen[0]
        for others in combinations(chosen[1:], 2):
            side = (first,) + others
            other_side = sum(1 << v for v in chosen if v not in side)
            if all((g.adjacency[v] & other_side) == other_side for v in side):
                return True
    return False


def has_kuratowski_minor(g: Graph) -> bool:
    """
    Exhaustive search for a K5 or K3,3 minor: some sequence of edge contractions must
    produce a graph containing K5 or K3,3 as a subgraph. Exponential; meant as an
    independent oracle for small graphs.

    Raises
    ------
    UsageError
        If the graph has more than 9 vertices.
    """
    if g.n > 9:
        raise UsageError(f"Minor search is limited to 9 vertices, got {g.n}")
    return _search_minor(g, set())


def _search_minor(g: Graph, seen: set) -> bool:
    if g.n < 5 or g in seen:
        return False
    seen.add(g)
    if _has_k5_subgraph(g) or _has_k33_subgraph(g):
        return True
    return any(_search_minor(g.contract(u, v), seen) for u, v in g.edges())


def stacked_triangulation(m: int, choose_face) -> Graph:
    """
    Stacked triangulation on ``m`` vertices: start from a triangle and repeatedly insert
    a vertex inside an existing face, joined to the three corners.

    Parameters
    ----------
    m : int
        Number of vertices, at least 3.
    choose_face : callable
        Called with the current list of faces; returns the index of the face to subdivide.

    Raises
    ------
    UsageError
        If ``m < 3``.
    """
    if m < 3:
        raise UsageError(f"A triangulation needs at least 3 vertices, got {m}")
    edges = [(0, 1), (1, 2), (0, 2)]
    # the triangle bounds two faces
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, m):
        a, b, c = faces.pop(choose_face(faces))
        edges.extend([(a, v), (b, v), (c, v)])
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    return Graph.from_edges(m, edges)


def maximal_planar(m: int) -> Graph:
    """
    Deterministic maximal planar graph on ``m`` vertices, with exactly ``3m - 6`` edges.
    New vertices are inserted into faces in round-robin order, oldest face first.

    Raises
    ------
    UsageError
        If ``m < 3``.

    Examples
    --------
    >>> maximal_planar(5).m
    9
    """
    return stacked_triangulation(m, choose_face=lambda faces: 0)


def random_stacked_triangulation(m: int, rng: np.random.Generator) -> Graph:
    """Stacked triangulation on ``m`` vertices with faces drawn uniformly by ``rng``."""
    return stacked_triangulation(m, choose_face=lambda faces: int(rng.integers(len(faces))))


# Top vertex 0, upper ring 1-5, lower ring 6-10, bottom vertex 11
_ICOSAHEDRON_EDGES = (
    [(0, 1 + i) for i in range(5)]
    + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1 + i, 6 + i) for i in range(5)]
    + [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(11, 6 + i) for i in range(5)]
)


@lru_cache(maxsize=1)
def icosahedron() -> Graph:
    """
    The icosahedron: the 5-regular triangulation on 12 vertices and 30 edges.

    Raises
    ------
    RuntimeError
        If the hard-coded adjacency fails its own invariants.
    """
    g = Graph.from_edges(12, _ICOSAHEDRON_EDGES)
    if g.m != 30 or set(g.degrees().tolist()) != {5} or not is_planar(g):
        raise RuntimeError("Icosahedron adjacency table is corrupted")
    return g


def diameter(g: Graph) -> int:
    """Diameter of a connected graph, by breadth-first search from every vertex."""
    best = 0
    for source in g.vertices:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adjacency[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) != g.n:
            raise UsageError("Diameter is only defined for connected graphs")
        best = max(best, max(dist.values()))
    return best
