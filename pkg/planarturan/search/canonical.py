# -*- coding: utf-8 -*-
"""
Canonical labeling of small graphs, for isomorph rejection.

Vertices are first partitioned by degree and the partition is refined until every
vertex of a cell has the same number of neighbours in every cell. Ties are then broken
by individualizing vertices one at a time, keeping the ordering whose adjacency code
is lexicographically largest. Interchangeable vertices (same neighbourhood apart from
each other) are individualized only once.
"""
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..graph import Graph, UsageError, iter_bits

MAX_CANONICAL_ORDER = 16


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Relabeling-invariant code of a graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    rows : tuple of ints
        ``rows[i]`` holds the adjacency of the i-th canonical vertex to the vertices before it,
        most significant bit first.
    """

    n: int
    rows: Tuple[int, ...]

    @property
    def bits(self) -> str:
        """Lower triangle of the canonical adjacency matrix, row by row."""
        return "".join(format(row, f"0{i}b") for i, row in enumerate(self.rows) if i > 0)

    def graph(self) -> Graph:
        """The canonical representative."""
        edges = [
            (i, j) for i, row in enumerate(self.rows) for j in range(i) if (row >> (i - 1 - j)) & 1
        ]
        return Graph.from_edges(self.n, edges)


def _refine(adj: Sequence[int], cells: List[int]) -> List[int]:
    while True:
        refined = list()
        changed = False
        for cell in cells:
            if not cell & (cell - 1):
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], int] = dict()
            for v in iter_bits(cell):
                signature = tuple((adj[v] & other).bit_count() for other in cells)
                groups[signature] = groups.get(signature, 0) | (1 << v)
            if len(groups) > 1:
                changed = True
                refined.extend(groups[signature] for signature in sorted(groups))
            else:
                refined.append(cell)
        cells = refined
        if not changed:
            return cells


def _rows(adj: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    rows = list()
    for i, v in enumerate(order):
        row = 0
        for u in order[:i]:
            row = (row << 1) | ((adj[v] >> u) & 1)
        rows.append(row)
    return tuple(rows)


def _twins(adj: Sequence[int], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_labeling(g: Graph) -> Tuple[CanonicalForm, Tuple[int, ...]]:
    """
    Canonical form and canonical vertex order of a graph.

    Parameters
    ----------
    g : Graph
        Graph with at most 16 vertices.

    Returns
    -------
    form : CanonicalForm
    order : tuple of ints
        ``order[i]`` is the vertex of ``g`` placed at canonical position ``i``.

    Raises
    ------
    UsageError
        If ``g`` has more than 16 vertices.
    """
    n = g.n
    if n > MAX_CANONICAL_ORDER:
        raise UsageError(f"Canonical forms are limited to {MAX_CANONICAL_ORDER} vertices, got {n}")
    adj = g.adjacency

    by_degree: Dict[int, int] = dict()
    for v in range(n):
        d = adj[v].bit_count()
        by_degree[d] = by_degree.get(d, 0) | (1 << v)
    cells = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    best_rows = None
    best_order: Tuple[int, ...] = tuple()

    def explore(cells: List[int]) -> None:
        nonlocal best_rows, best_order
        prefix = list()
        for cell in cells:
            if cell & (cell - 1):
                break
            prefix.append(cell.bit_length() - 1)
        rows = _rows(adj, prefix)
        if best_rows is not None and rows < best_rows[: len(rows)]:
            return
        if len(prefix) == n:
            if best_rows is None or rows > best_rows:
                best_rows, best_order = rows, tuple(prefix)
            return

        index = len(prefix)
        target = cells[index]
        tried: List[int] = list()
        for v in iter_bits(target):
            if any(_twins(adj, u, v) for u in tried):
                continue
            tried.append(v)
            split = cells[:index] + [1 << v, target & ~(1 << v)] + cells[index + 1 :]
            explore(_refine(adj, split))

    explore(cells)
    return CanonicalForm(n, best_rows if best_rows is not None else tuple()), best_order


def canonical_form(g: Graph) -> CanonicalForm:
    """
    Relabeling-invariant code of a graph: two graphs have the same form if and only if
    they are isomorphic.

    Raises
    ------
    UsageError
        If ``g`` has more than 16 vertices.

    Examples
    --------
    >>> from planarturan import path_graph, complete_graph
    >>> canonical_form(path_graph(3)) == canonical_form(complete_graph(3))
    False
    """
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """Relabel a graph into its canonical representative."""
    return g.relabel(canonical_labeling(g)[1])
