# -*- coding: utf-8 -*-
"""
Immutable simple graphs on dense integer labels.

Neighbourhoods are stored as Python integers used as bitsets: bit ``u`` of
``adj[v]`` is set if and only if ``uv`` is an edge. Python integers have
arbitrary width, so the same representation serves small and large graphs.
"""
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike


class UsageError(ValueError):
    """Raised when an operation is called with arguments outside of its domain."""

    pass


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask``, in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_set(mask: int) -> FrozenSet[int]:
    return frozenset(iter_bits(mask))


def set_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """
    Simple, undirected, finite graph with vertices ``0, 1, ..., n - 1``.

    Instances are immutable and hashable. Builder methods such as :meth:`with_edge`
    return new instances.

    Parameters
    ----------
    n : int
        Number of vertices.
    adjacency : iterable of int
        Neighbourhood bitsets, one per vertex.

    Raises
    ------
    UsageError
        If the adjacency is not symmetric, contains loops, or refers to vertices out of range.

    Examples
    --------
    >>> g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    >>> g.m
    3
    >>> sorted(g.neighbors(0))
    [1, 2]
    """

    __slots__ = ("_n", "_adj", "_m", "_hash")

    def __init__(self, n: int, adjacency: Iterable[int]):
        adj = tuple(int(a) for a in adjacency)
        if n < 0 or len(adj) != n:
            raise UsageError(f"Expected {n} adjacency entries, got {len(adj)}")

        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise UsageError(f"Vertex {v} has a neighbour outside of 0..{n - 1}")
            if (mask >> v) & 1:
                raise UsageError(f"Self-loop at vertex {v}")
            for u in iter_bits(mask):
                if not (adj[u] >> v) & 1:
                    raise UsageError(f"Asymmetric adjacency between {v} and {u}")

        self._n = n
        self._adj = adj
        self._m = sum(mask.bit_count() for mask in adj) // 2
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph from an edge list. Repeated edges are merged.

        Parameters
        ----------
        n : int
            Number of vertices.
        edges : iterable of 2-tuples
            Edges ``(u, v)`` with ``u != v``.

        Raises
        ------
        UsageError
            If an edge is a loop or refers to a vertex out of range.
        """
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"Edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise UsageError(f"Self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_adjacency_matrix(cls, matrix: ArrayLike) -> "Graph":
        """Build a graph from a symmetric 0/1 adjacency matrix."""
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise UsageError(f"Adjacency matrix must be square, got shape {matrix.shape}")
        n = matrix.shape[0]
        adj = [set_to_bits(np.flatnonzero(row).tolist()) for row in matrix]
        return cls(n, adj)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        """Decode a graph from a graph6 string. See :func:`planarturan.graph6_decode`."""
        from .parsers import graph6_decode

        return graph6_decode(text)

    def to_graph6(self) -> str:
        """Encode this graph as a graph6 string. See :func:`planarturan.graph6_encode`."""
        from .writers import graph6_encode

        return graph6_encode(self)

    @property
    def n(self) -> int:
        """Number of vertices"""
        return self._n

    @property
    def m(self) -> int:
        """Number of edges"""
        return self._m

    @property
    def adjacency(self) -> Tuple[int, ...]:
        """Neighbourhood bitsets, one per vertex."""
        return self._adj

    @property
    def vertices(self) -> range:
        return range(self._n)

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        return f"< Graph with {self._n} vertices and {self._m} edges >"

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return self._n == other._n and self._adj == other._adj
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __array__(self, *args, **kwargs) -> np.ndarray:
        """Adjacency matrix as an array of integers."""
        arr = np.zeros((self._n, self._n), dtype=int)
        for u, v in self.edges():
            arr[u, v] = arr[v, u] = 1
        return np.array(arr, *args, **kwargs)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise UsageError(f"Vertex {v} out of range for a graph on {self._n} vertices")

    def neighbor_bits(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitset."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Open neighbourhood N(v)."""
        return bits_to_set(self.neighbor_bits(v))

    def closed_neighbors(self, v: int) -> FrozenSet[int]:
        """Closed neighbourhood N[v]."""
        return bits_to_set(self.neighbor_bits(v) | (1 << v))

    def degree(self, v: int) -> int:
        return self.neighbor_bits(v).bit_count()

    def degrees(self) -> np.ndarray:
        """Array of vertex degrees."""
        return np.array([mask.bit_count() for mask in self._adj], dtype=int)

    def min_degree(self) -> int:
        """Minimum degree; zero for the graph without vertices."""
        return min((mask.bit_count() for mask in self._adj), default=0)

    def max_degree(self) -> int:
        """Maximum degree; zero for the graph without vertices."""
        return max((mask.bit_count() for mask in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._adj[u] >> v) & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, mask in enumerate(self._adj):
            yield from ((u, v) for v in iter_bits(mask >> (u + 1) << (u + 1)))

    def non_edges(self) -> Iterator[Tuple[int, int]]:
        """Yield pairs ``(u, v)``, ``u < v``, that are not edges."""
        for u, v in combinations(range(self._n), 2):
            if not (self._adj[u] >> v) & 1:
                yield (u, v)

    def edges_between(self, first: Iterable[int], second: Iterable[int]) -> int:
        """
        Number of edges with one end in ``first`` and the other end in ``second``.
        Edges inside the intersection of both sets are counted once.
        """
        a, b = set_to_bits(first), set_to_bits(second)
        count = sum((self._adj[u] & b).bit_count() for u in iter_bits(a))
        # edges with both ends in a & b were seen from both ends
        return count - self.induced_edge_count(iter_bits(a & b))

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        """Number of edges of the subgraph induced by ``vertices``."""
        mask = set_to_bits(vertices)
        return sum((self._adj[u] & mask).bit_count() for u in iter_bits(mask)) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with the edge ``uv`` added."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise UsageError(f"Self-loop at vertex {u}")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self._n, adj)

    def without_edge(self, u: int, v: int) -> "Graph":
        """New graph with the edge ``uv`` removed."""
        self._check_vertex(u)
        self._check_vertex(v)
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self._n, adj)

    def with_vertex(self, neighbors: Iterable[int] = tuple()) -> "Graph":
        """New graph with one more vertex, labelled ``n``, joined to ``neighbors``."""
        new = self._n
        adj = list(self._adj) + [0]
        for u in neighbors:
            self._check_vertex(u)
            adj[u] |= 1 << new
            adj[new] |= 1 << u
        return Graph(new + 1, adj)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """
        New graph in which vertex ``order[i]`` becomes vertex ``i``.

        Raises
        ------
        UsageError
            If ``order`` is not a permutation of the vertices.
        """
        if sorted(order) != list(range(self._n)):
            raise UsageError("Relabeling must be a permutation of the vertices")
        position = {old: new for new, old in enumerate(order)}
        return Graph.from_edges(
            self._n, ((position[u], position[v]) for u, v in self.edges())
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled in increasing order."""
        kept = sorted(set(vertices))
        for v in kept:
            self._check_vertex(v)
        rest = sorted(set(range(self._n)).difference(kept))
        return self.relabel(kept + rest).induced_prefix(len(kept))

    def induced_prefix(self, size: int) -> "Graph":
        """Subgraph induced by the vertices ``0, ..., size - 1``."""
        mask = (1 << size) - 1
        return Graph(size, (a & mask for a in self._adj[:size]))

    def without_vertices(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by the complement of ``vertices``."""
        removed = set(vertices)
        return self.induced_subgraph(v for v in range(self._n) if v not in removed)

    def contract(self, u: int, v: int) -> "Graph":
        """
        Contract the edge (or non-edge) ``uv`` into a single vertex. Vertex ``v`` is removed
        and later vertices shift down by one. Parallel edges and loops are discarded.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise UsageError("Cannot contract a vertex with itself")
        adj = list(self._adj)
        merged = (adj[u] | adj[v]) & ~((1 << u) | (1 << v))
        for w in iter_bits(adj[v]):
            adj[w] &= ~(1 << v)
        for w in iter_bits(merged):
            adj[w] |= 1 << u
        adj[u] = merged
        adj[v] = 0
        order = [w for w in range(self._n) if w != v] + [v]
        return Graph(self._n, adj).relabel(order).induced_prefix(self._n - 1)

    def component_of(self, v: int) -> FrozenSet[int]:
        """Vertex set of the connected component containing ``v``."""
        return bits_to_set(self._component_bits(v))

    def _component_bits(self, v: int) -> int:
        self._check_vertex(v)
        seen = frontier = 1 << v
        while frontier:
            reached = 0
            for u in iter_bits(frontier):
                reached |= self._adj[u]
            frontier = reached & ~seen
            seen |= frontier
        return seen

    def is_component(self, vertices: Iterable[int]) -> bool:
        """Whether ``vertices`` is exactly the vertex set of one connected component."""
        mask = set_to_bits(vertices)
        if not mask:
            return False
        first = (mask & -mask).bit_length() - 1
        return self._component_bits(first) == mask

    def is_bipartite(self) -> bool:
        color: Dict[int, int] = dict()
        for start in range(self._n):
            if start in color:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in iter_bits(self._adj[u]):
                    if w not in color:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True


@dataclass(frozen=True)
class DegreeCensus:
    """
    Number of vertices of each degree.

    Parameters
    ----------
    counts : mapping
        Map from degree ``i`` to the number of vertices of degree ``i``. Degrees
        absent from the map have count zero.
    """

    counts: Mapping[int, int] = field(default_factory=dict)

    def __getitem__(self, degree: int) -> int:
        return self.counts.get(degree, 0)

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    @property
    def degree_sum(self) -> int:
        return sum(d * c for d, c in self.counts.items())

    def as_dict(self) -> Dict[int, int]:
        return dict(sorted(self.counts.items()))


def neighbors(g: Graph, v: int) -> FrozenSet[int]:
    """
    Open neighbourhood of a vertex.

    Parameters
    ----------
    g : Graph
        Host graph.
    v : int
        Vertex label.

    Returns
    -------
    neighbourhood : frozenset of ints

    Raises
    ------
    UsageError
        If ``v`` is not a vertex of ``g``.
    """
    return g.neighbors(v)


def second_neighborhood(g: Graph, v: int) -> FrozenSet[int]:
    """
    Vertices at distance exactly two from ``v``.

    Raises
    ------
    UsageError
        If ``v`` is not a vertex of ``g``.
    """
    return bits_to_set(second_neighborhood_bits(g, v))


def second_neighborhood_bits(g: Graph, v: int) -> int:
    first = g.neighbor_bits(v)
    reached = 0
    for u in iter_bits(first):
        reached |= g.adjacency[u]
    return reached & ~(first | (1 << v))


def degree_census(g: Graph) -> DegreeCensus:
    """Number of vertices of each degree, as a :class:`DegreeCensus`."""
    values, counts = np.unique(g.degrees(), return_counts=True)
    return DegreeCensus({int(d): int(c) for d, c in zip(values, counts)})


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """
    Disjoint union of graphs. The vertices of ``parts[i]`` are relabelled to follow
    those of ``parts[i - 1]``.

    Raises
    ------
    UsageError
        If ``parts`` is empty.
    """
    parts = list(parts)
    if not parts:
        raise UsageError("Disjoint union of an empty list of graphs")
    adj: List[int] = list()
    offset = 0
    for part in parts:
        adj.extend(mask << offset for mask in part.adjacency)
        offset += part.n
    return Graph(offset, adj)


def components(g: Graph) -> List[FrozenSet[int]]:
    """Partition of the vertices into connected components, ordered by smallest vertex."""
    result = list()
    remaining = (1 << g.n) - 1
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = g._component_bits(start)
        result.append(bits_to_set(comp))
        remaining &= ~comp
    return result


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, (full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise UsageError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """Star K_{1,leaves}; the center is vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel_graph(spokes: int) -> Graph:
    """Cycle on ``spokes`` vertices plus a hub, labelled 0, joined to every cycle vertex."""
    rim = [(1 + i, 1 + (i + 1) % spokes) for i in range(spokes)]
    return Graph.from_edges(spokes + 1, rim + [(0, i) for i in range(1, spokes + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}; the first part is ``0, ..., a - 1``."""
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def bipyramid_graph(rim: int) -> Graph:
    """Two non-adjacent apexes, labelled 0 and 1, joined to every vertex of a cycle on ``rim`` vertices."""
    if rim < 3:
        raise UsageError(f"A bipyramid needs a rim of at least 3 vertices, got {rim}")
    cycle = [(2 + i, 2 + (i + 1) % rim) for i in range(rim)]
    spokes = [(apex, 2 + i) for apex in (0, 1) for i in range(rim)]
    return Graph.from_edges(rim + 2, cycle + spokes)


def double_fan_graph(path: int) -> Graph:
    """Adjacent apexes, labelled 0 and 1, both joined to every vertex of a path on ``path`` vertices."""
    line = [(2 + i, 3 + i) for i in range(path - 1)]
    spokes = [(apex, 2 + i) for apex in (0, 1) for i in range(path)]
    return Graph.from_edges(path + 2, [(0, 1)] + line + spokes)
