# -*- coding: utf-8 -*-
"""
Detection of quasi-double stars, double stars and caterpillars as subgraphs.
"""
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from .graph import Graph, UsageError, iter_bits

ORACLE_MAX_ORDER = 10


@dataclass(frozen=True)
class PatternSpec:
    """
    Quasi-double star W_{h,k}: the path ``v1 v2 v3`` with ``h`` leaves added at ``v1``
    and ``k`` leaves added at ``v3``.

    Parameters
    ----------
    h, k : int
        Leaf counts, non-negative.

    Raises
    ------
    UsageError
        If either leaf count is negative.
    """

    h: int
    k: int

    def __post_init__(self):
        if self.h < 0 or self.k < 0:
            raise UsageError(f"Leaf counts must be non-negative, got ({self.h}, {self.k})")

    def __str__(self) -> str:
        return f"W_{{{self.h},{self.k}}}"

    @property
    def order(self) -> int:
        """Number of vertices of the pattern."""
        return self.h + self.k + 3

    @property
    def leaves(self) -> int:
        return self.h + self.k

    def normalized(self) -> "PatternSpec":
        """Equivalent pattern with ``h <= k``."""
        return PatternSpec(min(self.h, self.k), max(self.h, self.k))

    def caterpillar(self) -> "CaterpillarSpec":
        return CaterpillarSpec((self.h, 0, self.k))

    def tree(self) -> Graph:
        """The pattern as a graph: ``v1, v2, v3 = 0, 1, 2`` followed by the leaves of ``v1``, then of ``v3``."""
        return self.caterpillar().tree()


@dataclass(frozen=True)
class CaterpillarSpec:
    """
    Caterpillar obtained from the path ``v1 ... vl`` by adding ``s_i`` leaves at ``v_i``.

    Parameters
    ----------
    leaves : tuple of ints
        Leaf counts ``(s_1, ..., s_l)``; ``l >= 1``.
    """

    leaves: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(self.leaves))
        if not self.leaves or any(s < 0 for s in self.leaves):
            raise UsageError(f"Invalid caterpillar leaf counts {self.leaves}")

    @classmethod
    def double_star(cls, h: int, k: int) -> "CaterpillarSpec":
        return cls((h, k))

    @property
    def spine(self) -> int:
        return len(self.leaves)

    @property
    def order(self) -> int:
        return self.spine + sum(self.leaves)

    def tree(self) -> Graph:
        """The caterpillar as a graph; spine vertices come first."""
        edges = [(i, i + 1) for i in range(self.spine - 1)]
        label = self.spine
        for i, count in enumerate(self.leaves):
            for _ in range(count):
                edges.append((i, label))
                label += 1
        return Graph.from_edges(label, edges)


class WEmbedding(NamedTuple):
    """Image of W_{h,k} in a host graph."""

    v1: int
    v2: int
    v3: int
    leaves1: Tuple[int, ...]
    leaves3: Tuple[int, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return (self.v1, self.v2, self.v3) + self.leaves1 + self.leaves3

    def tree_edges(self) -> List[Tuple[int, int]]:
        return (
            [(self.v1, self.v2), (self.v2, self.v3)]
            + [(self.v1, u) for u in self.leaves1]
            + [(self.v3, w) for w in self.leaves3]
        )


def _pick_leaves(a: int, b: int, h: int, k: int) -> Tuple[List[int], List[int]]:
    # Disjoint leaf sets X subset A, Y subset B with |X| = h, |Y| = k exist iff
    # |A| >= h, |B| >= k and |A | B| >= h + k. Necessity is clear. Sufficiency:
    # take X from A - B first and top up from A & B; then B - X still has
    # |B - A| + |A & B| - (h - min(h, |A - B|)) >= k elements.
    only_a, only_b, shared = a & ~b, b & ~a, a & b
    first = list(iter_bits(only_a))[:h]
    pool = list(iter_bits(shared))
    first += pool[: h - len(first)]
    pool = pool[h - min(h, only_a.bit_count()) :]
    second = list(iter_bits(only_b))[:k]
    second += pool[: k - len(second)]
    return first, second


def _defect_condition(a: int, b: int, h: int, k: int) -> bool:
    return a.bit_count() >= h and b.bit_count() >= k and (a | b).bit_count() >= h + k


def find_w(g: Graph, p: PatternSpec) -> Optional[WEmbedding]:
    """
    Search for a copy of W_{h,k} in ``g`` (not necessarily induced).

    A copy with path ``u v w`` exists iff, with ``A = N(u) - {v, w}`` and
    ``B = N(w) - {u, v}``, one has ``|A| >= h``, ``|B| >= k`` and ``|A | B| >= h + k``.

    Parameters
    ----------
    g : Graph
        Host graph.
    p : PatternSpec
        Pattern.

    Returns
    -------
    embedding : WEmbedding or None
        First embedding found, or ``None`` if ``g`` is W_{h,k}-free.
    """
    h, k = p.h, p.k
    adj = g.adjacency
    degrees = [mask.bit_count() for mask in adj]
    for v in range(g.n):
        if degrees[v] < 2:
            continue
        for u in iter_bits(adj[v]):
            if degrees[u] < h + 1:
                continue
            for w in iter_bits(adj[v]):
                if w == u or degrees[w] < k + 1:
                    continue
                a = adj[u] & ~((1 << v) | (1 << w))
                b = adj[w] & ~((1 << v) | (1 << u))
                if _defect_condition(a, b, h, k):
                    first, second = _pick_leaves(a, b, h, k)
                    return WEmbedding(u, v, w, tuple(first), tuple(second))
    return None


def contains_w(
    g: Graph, p: PatternSpec, witness: bool = False
) -> Union[bool, Optional[WEmbedding]]:
    """
    Decide whether ``g`` contains W_{h,k} as a subgraph.

    Parameters
    ----------
    g : Graph
        Host graph.
    p : PatternSpec
        Pattern.
    witness : bool, optional
        If True, return the embedding found (or None) instead of a boolean.

    Examples
    --------
    >>> from planarturan import path_graph
    >>> contains_w(path_graph(5), PatternSpec(1, 1))
    True
    """
    found = find_w(g, p)
    if witness:
        return found
    return found is not None


def is_free(g: Graph, p: PatternSpec) -> bool:
    """Whether ``g`` contains no copy of W_{h,k}."""
    return find_w(g, p) is None


def find_double_star(g: Graph, h: int, k: int) -> Optional[Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]]:
    """
    Search for a double star S_{h,k}: an edge ``uv`` with ``h`` leaves at ``u`` and ``k`` at ``v``.

    Returns
    -------
    embedding : tuple or None
        ``(u, v, leaves_of_u, leaves_of_v)``.
    """
    adj = g.adjacency
    for u in range(g.n):
        if adj[u].bit_count() < h + 1:
            continue
        for v in iter_bits(adj[u]):
            if adj[v].bit_count() < k + 1:
                continue
            a = adj[u] & ~(1 << v)
            b = adj[v] & ~(1 << u)
            if _defect_condition(a, b, h, k):
                first, second = _pick_leaves(a, b, h, k)
                return (u, v, tuple(first), tuple(second))
    return None


def contains_double_star(g: Graph, h: int, k: int) -> bool:
    return find_double_star(g, h, k) is not None


def _search_order(pattern: Graph) -> List[int]:
    # Each vertex after the first of its component has an earlier neighbour
    order: List[int] = list()
    placed = 0
    degrees = [mask.bit_count() for mask in pattern.adjacency]
    while len(order) < pattern.n:
        frontier = 0
        for v in order:
            frontier |= pattern.adjacency[v]
        frontier &= ~placed
        candidates = list(iter_bits(frontier)) or [v for v in pattern.vertices if not (placed >> v) & 1]
        nxt = max(candidates, key=lambda v: (degrees[v], -v))
        order.append(nxt)
        placed |= 1 << nxt
    return order


def find_subgraph(g: Graph, pattern: Graph) -> Optional[Dict[int, int]]:
    """
    Exhaustive search for an injective map from the pattern into ``g`` that sends edges to edges.

    Raises
    ------
    UsageError
        If the pattern has more than 10 vertices.

    Returns
    -------
    mapping : dict or None
        Map from pattern vertices to host vertices.
    """
    if pattern.n > ORACLE_MAX_ORDER:
        raise UsageError(
            f"Subgraph oracle handles patterns of at most {ORACLE_MAX_ORDER} vertices, got {pattern.n}"
        )
    if pattern.n > g.n or pattern.m > g.m:
        return None

    order = _search_order(pattern)
    host_degrees = [mask.bit_count() for mask in g.adjacency]
    pattern_degrees = [mask.bit_count() for mask in pattern.adjacency]
    earlier = [
        [q for q in order[:i] if (pattern.adjacency[p] >> q) & 1] for i, p in enumerate(order)
    ]
    mapping: Dict[int, int] = dict()

    def extend(index: int, used: int) -> bool:
        if index == len(order):
            return True
        p = order[index]
        if earlier[index]:
            candidates = g.adjacency[mapping[earlier[index][0]]]
            for q in earlier[index][1:]:
                candidates &= g.adjacency[mapping[q]]
        else:
            candidates = (1 << g.n) - 1
        candidates &= ~used
        for x in iter_bits(candidates):
            if host_degrees[x] < pattern_degrees[p]:
                continue
            mapping[p] = x
            if extend(index + 1, used | (1 << x)):
                return True
            del mapping[p]
        return False

    if extend(0, 0):
        return dict(mapping)
    return None


def contains_subgraph_oracle(g: Graph, pattern: Graph) -> bool:
    """
    Ground-truth subgraph containment by exhaustive search with degree pruning.

    Raises
    ------
    UsageError
        If the pattern has more than 10 vertices.
    """
    return find_subgraph(g, pattern) is not None


def contains_caterpillar(g: Graph, spec: CaterpillarSpec) -> bool:
    """
    Decide whether ``g`` contains the caterpillar ``spec``. Double stars and quasi-double
    stars use the fast criterion; other caterpillars go through the exhaustive oracle.
    """
    if spec.spine == 2:
        return contains_double_star(g, *spec.leaves)
    if spec.spine == 3 and spec.leaves[1] == 0:
        return contains_w(g, PatternSpec(spec.leaves[0], spec.leaves[2]))
    return contains_subgraph_oracle(g, spec.tree())
