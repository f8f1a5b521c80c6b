# -*- coding: utf-8 -*-
"""
Executable structural lemmas about planar W_{h,k}-free graphs.

Every check takes a graph (and a vertex, edge or path of it), tests the hypotheses of
a structural statement and, if they hold, its conclusion. The outcome is a
:class:`Verdict`: ``skipped`` when the hypotheses are not met, ``held`` or ``violated``
otherwise. A violation of a proven statement points to a bug in this package.

Statements whose content is an inequality between edge counts are provided as pure
evaluators on numbers (:func:`euler_bound`, :func:`component_bound`,
:func:`neighborhood_bound`, :func:`low_degree_bound`).

Random instances come from :func:`generate_instance`, and :func:`run_suite` runs
every check over many of them.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum, unique
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .certificate import SCHEMA_VERSION
from .constructions import check_range
from .graph import (
    Graph,
    UsageError,
    bipyramid_graph,
    bits_to_set,
    complete_graph,
    components,
    disjoint_union,
    double_fan_graph,
    iter_bits,
    path_graph,
    second_neighborhood_bits,
    set_to_bits,
    wheel_graph,
)
from .patterns import PatternSpec, find_w, is_free
from .planarity import is_planar, random_stacked_triangulation

log = logging.getLogger(__name__)

# Probability that a block of a generated instance is a planted structure
PLANT_RATE = 0.3

# Instances resampled per suite sample before giving up on it
GENERATION_ATTEMPTS = 8

W25 = PatternSpec(2, 5)


@unique
class Verdict(Enum):
    held = "held"
    skipped = "skipped"
    violated = "violated"


class GenerationFailed(RuntimeError):
    """Raised when a generated instance cannot meet the requested minimum degree."""

    pass


def _verdict(conclusion: bool) -> Verdict:
    return Verdict.held if conclusion else Verdict.violated


def _combine(verdicts: Iterable[Verdict]) -> Verdict:
    """Instance-level verdict: violated if any check failed, held if any check applied."""
    seen = set(verdicts)
    if Verdict.violated in seen:
        return Verdict.violated
    if Verdict.held in seen:
        return Verdict.held
    return Verdict.skipped


@lru_cache(maxsize=1024)
def _admissible(g: Graph, p: PatternSpec) -> bool:
    return is_planar(g) and is_free(g, p)


def _standing(g: Graph, p: PatternSpec, min_degree: int) -> bool:
    return g.min_degree() >= min_degree and _admissible(g, p)


def _slope(p: PatternSpec) -> Fraction:
    t = p.h + p.k
    return Fraction(3 * t, t + 2)


@dataclass(frozen=True)
class EdgeNeighborhoodPartition:
    """
    Decomposition of the vertices around an edge ``xy``.

    Parameters
    ----------
    x, y : int
        Ends of the edge.
    common : frozenset
        Common neighbours of ``x`` and ``y``.
    private_x, private_y : frozenset
        Neighbours of one end that are neither the other end nor one of its neighbours.
    closure : frozenset
        ``{x, y}`` together with all their neighbours.
    fringe : frozenset
        Vertices outside ``closure`` at distance two from ``x`` or from ``y``.
    fringe_degree4 : frozenset
        Fringe vertices of degree four.
    outside : frozenset
        Vertices not in ``closure``.
    """

    x: int
    y: int
    common: FrozenSet[int]
    private_x: FrozenSet[int]
    private_y: FrozenSet[int]
    closure: FrozenSet[int]
    fringe: FrozenSet[int]
    fringe_degree4: FrozenSet[int]
    outside: FrozenSet[int]

    @classmethod
    def from_edge(cls, g: Graph, x: int, y: int) -> "EdgeNeighborhoodPartition":
        """
        Raises
        ------
        UsageError
            If ``xy`` is not an edge of ``g``.
        """
        if x == y or not g.has_edge(x, y):
            raise UsageError(f"({x}, {y}) is not an edge")
        adj = g.adjacency
        nx, ny = adj[x], adj[y]
        closure = nx | ny | (1 << x) | (1 << y)
        outside = ((1 << g.n) - 1) & ~closure
        fringe = (second_neighborhood_bits(g, x) | second_neighborhood_bits(g, y)) & outside
        return cls(
            x=x,
            y=y,
            common=bits_to_set(nx & ny),
            private_x=bits_to_set(nx & ~ny & ~(1 << y)),
            private_y=bits_to_set(ny & ~nx & ~(1 << x)),
            closure=bits_to_set(closure),
            fringe=bits_to_set(fringe),
            fringe_degree4=frozenset(v for v in iter_bits(fringe) if adj[v].bit_count() == 4),
            outside=bits_to_set(outside),
        )

    def well_formed(self, g: Graph) -> bool:
        """Whether the parts are disjoint and sized as the degrees of ``x`` and ``y`` require."""
        ends = frozenset((self.x, self.y))
        parts = [ends, self.common, self.private_x, self.private_y]
        if sum(map(len, parts)) != len(frozenset().union(*parts)):
            return False
        if frozenset().union(*parts) != self.closure:
            return False
        if len(self.closure) != g.degree(self.x) + g.degree(self.y) - len(self.common):
            return False
        return not (self.fringe & self.closure) and self.fringe_degree4 <= self.fringe


# Pure evaluators


def euler_bound(n: int, m: int, bipartite: bool = False) -> Verdict:
    """
    Edge bound of planar graphs: ``m <= 3n - 6``, and ``m <= 2n - 4`` for bipartite graphs.
    Applies to ``n >= 3``. The caller vouches for planarity.
    """
    if n < 3:
        return Verdict.skipped
    return _verdict(m <= (2 * n - 4 if bipartite else 3 * n - 6))


def component_bound(
    slope: Rational, n: int, order: int, component_edges: int, rest_edges: int
) -> Verdict:
    """
    Extend a linear edge bound over a small planar component.

    If a planar component of order ``order`` has ``component_edges <= 3 * order - 6``
    edges, the rest of the graph has ``rest_edges <= slope * (n - order)`` edges and
    ``order <= 6 / (3 - slope)`` with ``slope < 3``, then the whole graph has at most
    ``slope * n`` edges.

    Parameters
    ----------
    slope : Rational
        Edge density of the bound.
    n : int
        Number of vertices of the whole graph.
    order : int
        Number of vertices of the component.
    component_edges, rest_edges : int
        Edge counts of the component and of the rest of the graph.

    Returns
    -------
    verdict : Verdict
    """
    slope = Fraction(slope)
    if not (slope < 3 and 3 <= order <= n):
        return Verdict.skipped
    if order > 6 / (3 - slope) or component_edges > 3 * order - 6:
        return Verdict.skipped
    if rest_edges > slope * (n - order):
        return Verdict.skipped
    return _verdict(component_edges + rest_edges <= slope * n)


def neighborhood_bound(
    h: int, k: int, n: int, degree: int, closed_edges: int, rest_edges: int
) -> Verdict:
    """
    Density bound around a vertex of large degree.

    With ``slope = 3(h + k) / (h + k + 2)``: for a vertex of degree ``degree >= h + k + 1``
    whose closed neighbourhood spans a component with ``closed_edges`` edges, if
    ``rest_edges <= slope * (n - degree - 1)`` then the graph has at most ``slope * n``
    edges. The closed neighbourhood must respect the planar bound when
    ``degree = h + k + 1``, and have at most ``(h + 2) * degree / 2`` edges (no vertex of
    the neighbourhood sees more than ``h`` others) when the degree is larger.
    """
    slope = Fraction(3 * (h + k), h + k + 2)
    if not (1 <= h <= 2 <= k) or degree < h + k + 1 or degree > n - 1:
        return Verdict.skipped
    if degree == h + k + 1:
        allowed = Fraction(3 * (degree + 1) - 6)
    else:
        allowed = Fraction((h + 2) * degree, 2)
    if closed_edges > allowed or rest_edges > slope * (n - degree - 1):
        return Verdict.skipped
    return _verdict(closed_edges + rest_edges <= slope * n)


def low_degree_bound(slope: Rational, n: int, degree: int, rest_edges: int) -> Verdict:
    """If ``degree <= slope`` and ``rest_edges <= slope * (n - 1)``, then ``degree + rest_edges <= slope * n``."""
    slope = Fraction(slope)
    if n < 1 or degree > slope or rest_edges > slope * (n - 1):
        return Verdict.skipped
    return _verdict(degree + rest_edges <= slope * n)


# Checks on graphs


def check_euler_lemma(g: Graph) -> Verdict:
    """Planar graphs on ``n >= 3`` vertices have at most ``3n - 6`` edges, ``2n - 4`` if bipartite."""
    if g.n < 3 or not is_planar(g):
        return Verdict.skipped
    verdict = euler_bound(g.n, g.m)
    if verdict is Verdict.held and g.is_bipartite():
        verdict = euler_bound(g.n, g.m, bipartite=True)
    return verdict


def check_component_lemma(g: Graph, p: PatternSpec, x: int) -> Verdict:
    """
    In a planar W_{h,k}-free graph of minimum degree at least ``h + 1``, a vertex ``x`` of
    degree at least ``h + k + 1`` spans a component with its neighbours. When the degree
    is at least ``h + k + 2``, no neighbour of ``x`` has more than ``h`` neighbours in ``N(x)``.

    Parameters
    ----------
    g : Graph
    p : PatternSpec
        Pattern; ``h`` and ``k`` are taken from its normalized form.
    x : int
        Vertex of ``g``.

    Returns
    -------
    verdict : Verdict
        ``skipped`` when the hypotheses fail.
    """
    p = p.normalized()
    h, k = p.h, p.k
    degree = g.degree(x)
    if degree < h + k + 1 or not _standing(g, p, h + 1):
        return Verdict.skipped
    inner = g.neighbor_bits(x)
    if not g.is_component(iter_bits(inner | (1 << x))):
        return Verdict.violated
    if degree >= h + k + 2:
        adj = g.adjacency
        if any((adj[u] & inner).bit_count() > h for u in iter_bits(inner)):
            return Verdict.violated
    return Verdict.held


def check_second_neighborhood_lemma(g: Graph, p: PatternSpec, x: int) -> Verdict:
    """
    In a planar W_{h,k}-free graph of minimum degree at least ``h + 1``, a vertex ``x`` of
    degree at least ``h + k`` dominates the neighbourhood of every vertex at distance two,
    and ``x`` spans a component with its first and second neighbourhoods.
    """
    p = p.normalized()
    h, k = p.h, p.k
    if g.degree(x) < h + k or not _standing(g, p, h + 1):
        return Verdict.skipped
    adj = g.adjacency
    inner = adj[x]
    second = second_neighborhood_bits(g, x)
    if any(adj[y] & ~inner for y in iter_bits(second)):
        return Verdict.violated
    return _verdict(g.is_component(iter_bits(inner | second | (1 << x))))


def check_star_lemma(g: Graph, p: PatternSpec, x: int) -> Verdict:
    """
    For ``h + k >= 5``: in a planar W_{h,k}-free graph of minimum degree at least ``h + 1``,
    a vertex of degree ``h + k`` whose neighbours all have degree ``h + k - 1`` has a
    vertex at distance two.
    """
    p = p.normalized()
    t = p.h + p.k
    if t < 5 or g.degree(x) != t:
        return Verdict.skipped
    adj = g.adjacency
    if any(adj[u].bit_count() != t - 1 for u in iter_bits(adj[x])):
        return Verdict.skipped
    if not _standing(g, p, p.h + 1):
        return Verdict.skipped
    return _verdict(second_neighborhood_bits(g, x) != 0)


def check_common_neighbor_lemma(g: Graph, p: PatternSpec, x: int, y: int) -> Verdict:
    """
    In a planar W_{h,k}-free graph, an edge ``xy`` with ``d(x) >= k + 2 >= d(y)`` and at
    least one common neighbour has at least ``d(y) - h`` common neighbours.

    Parameters
    ----------
    g : Graph
    p : PatternSpec
    x, y : int
        Ends of an edge, ``x`` being the end of larger degree.
    """
    p = p.normalized()
    h, k = p.h, p.k
    if not g.has_edge(x, y):
        return Verdict.skipped
    adj = g.adjacency
    big, small = adj[x].bit_count(), adj[y].bit_count()
    common = adj[x] & adj[y]
    if not (big >= k + 2 >= small) or not common:
        return Verdict.skipped
    if not _admissible(g, p):
        return Verdict.skipped
    return _verdict(common.bit_count() >= small - h)


def check_full_degree_edge(g: Graph, p: PatternSpec, x: int, y: int) -> Verdict:
    """
    In a planar W_{h,k}-free graph of minimum degree at least ``max(h + 1, 3)``, an edge
    whose ends both have degree ``h + k`` spans a component with the neighbours of its ends.
    """
    p = p.normalized()
    t = p.h + p.k
    if not g.has_edge(x, y) or g.degree(x) != t or g.degree(y) != t:
        return Verdict.skipped
    if not _standing(g, p, max(p.h + 1, 3)):
        return Verdict.skipped
    adj = g.adjacency
    closure = adj[x] | adj[y] | (1 << x) | (1 << y)
    return _verdict(g.is_component(iter_bits(closure)))


def check_full_degree_path(g: Graph, p: PatternSpec, x: int, y: int, z: int) -> Verdict:
    """
    In a planar W_{h,k}-free graph of minimum degree at least ``max(h + 1, 3)``, let
    ``x`` and ``z`` be non-adjacent vertices of degree ``h + k`` with a common neighbour
    ``y`` of degree between 3 and ``h + k - 1``. Then ``N(x) = N(z)``, and ``N[x]`` with
    ``z`` is a component.
    """
    p = p.normalized()
    t = p.h + p.k
    if len({x, y, z}) != 3 or g.has_edge(x, z):
        return Verdict.skipped
    if not (g.has_edge(x, y) and g.has_edge(y, z)):
        return Verdict.skipped
    if g.degree(x) != t or g.degree(z) != t or not (3 <= g.degree(y) <= t - 1):
        return Verdict.skipped
    if not _standing(g, p, max(p.h + 1, 3)):
        return Verdict.skipped
    adj = g.adjacency
    if adj[x] != adj[z]:
        return Verdict.violated
    return _verdict(g.is_component(iter_bits(adj[x] | (1 << x) | (1 << z))))


W25_CLAIMS = (
    "private-neighbours",
    "fringe-common",
    "fringe-outside",
    "fringe-without-common",
    "fringe-one-common",
    "fringe-sides",
    "fringe-degree",
    "fringe-degree4-count",
    "fringe-size",
)


def check_w25_claims(g: Graph, x: int, y: int) -> Dict[str, Verdict]:
    """
    Structure around an edge joining two vertices of degree 6 in a planar
    W_{2,5}-free graph with minimum degree at least 3 and maximum degree at most 6.

    Write ``C`` for the common neighbours of ``x`` and ``y``, ``X`` and ``Y`` for their
    private neighbours, ``O`` for the vertices outside of the closed neighbourhoods and
    ``F`` for the fringe (vertices of ``O`` at distance two from ``x`` or ``y``).

    * ``private-neighbours``: a vertex of ``X`` has at most one neighbour in ``X`` or
      ``O``, and there are at most ``|X|`` edges between ``X`` and ``X`` with ``O``;
      likewise for ``Y``.

    The remaining claims assume ``2 <= |C| <= 5`` and a non-empty fringe; a claim with a
    condition is skipped when no fringe vertex meets it. For every ``v`` in ``F``:

    * ``fringe-common``: ``v`` has at most 2 neighbours in ``C``;
    * ``fringe-outside``: ``v`` has at most 1 neighbour in ``O``;
    * ``fringe-without-common``: if ``v`` has no neighbour in ``C``, it has at least 2
      neighbours in ``X`` or at least 2 in ``Y``;
    * ``fringe-one-common``: if ``v`` has exactly one neighbour in ``C``, it has exactly
      one in ``X`` and one in ``Y``;
    * ``fringe-sides``: if ``v`` is at distance two from ``x``, it has at most one
      neighbour in ``Y``, and symmetrically;
    * ``fringe-degree``: ``v`` has degree at most 4.

    Finally ``fringe-degree4-count`` asserts that at most ``|Y|`` fringe vertices have
    degree 4, and ``fringe-size`` that ``|F| <= 12 - 3|Y| / 2``.

    Returns
    -------
    verdicts : dict
        Verdict per claim name, see :data:`W25_CLAIMS`.
    """
    verdicts = {name: Verdict.skipped for name in W25_CLAIMS}
    if not g.has_edge(x, y) or g.degree(x) != 6 or g.degree(y) != 6:
        return verdicts
    if g.max_degree() > 6 or not _standing(g, W25, 3):
        return verdicts

    part = EdgeNeighborhoodPartition.from_edge(g, x, y)
    adj = g.adjacency
    common, px, py = set_to_bits(part.common), set_to_bits(part.private_x), set_to_bits(part.private_y)
    outside = set_to_bits(part.outside)

    def private_ok(private: int) -> bool:
        reach = private | outside
        if any((adj[u] & reach).bit_count() > 1 for u in iter_bits(private)):
            return False
        return g.edges_between(iter_bits(private), iter_bits(reach)) <= private.bit_count()

    verdicts["private-neighbours"] = _verdict(private_ok(px) and private_ok(py))

    if not (2 <= common.bit_count() <= 5) or not part.fringe:
        return verdicts

    # conclusions per claim, only for fringe vertices that meet its condition
    outcomes: Dict[str, List[bool]] = {name: [] for name in W25_CLAIMS[1:7]}
    for v in part.fringe:
        nv = adj[v]
        c = (nv & common).bit_count()
        sx, sy = (nv & px).bit_count(), (nv & py).bit_count()
        outcomes["fringe-common"].append(c <= 2)
        outcomes["fringe-outside"].append((nv & outside).bit_count() <= 1)
        if c == 0:
            outcomes["fringe-without-common"].append(sx >= 2 or sy >= 2)
        if c == 1:
            outcomes["fringe-one-common"].append(sx == 1 and sy == 1)
        if nv & adj[x]:
            outcomes["fringe-sides"].append(sy <= 1)
        if nv & adj[y]:
            outcomes["fringe-sides"].append(sx <= 1)
        outcomes["fringe-degree"].append(nv.bit_count() <= 4)
    for name, conclusions in outcomes.items():
        if conclusions:
            verdicts[name] = _verdict(all(conclusions))

    private_y = len(part.private_y)
    verdicts["fringe-degree4-count"] = _verdict(len(part.fringe_degree4) <= private_y)
    verdicts["fringe-size"] = _verdict(2 * len(part.fringe) <= 24 - 3 * private_y)
    return verdicts


def check_neighborhood_bound(g: Graph, p: PatternSpec, x: int) -> Verdict:
    """
    In a planar W_{h,k}-free graph of minimum degree at least ``h + 1``, let ``x`` have
    degree at least ``h + k + 1``. If the graph without ``N[x]`` has at most
    ``slope * (n - d(x) - 1)`` edges, then the graph has at most ``slope * n`` edges,
    where ``slope = 3(h + k) / (h + k + 2)``.
    """
    p = p.normalized()
    h, k = p.h, p.k
    degree = g.degree(x)
    if degree < h + k + 1 or not _standing(g, p, h + 1):
        return Verdict.skipped
    slope = _slope(p)
    closed = g.closed_neighbors(x)
    rest = g.induced_edge_count(v for v in g.vertices if v not in closed)
    if rest > slope * (g.n - degree - 1):
        return Verdict.skipped
    return _verdict(g.m <= slope * g.n)


def check_degree_census(g: Graph, p: PatternSpec) -> Verdict:
    """
    Degree census for ``t = h + k`` in ``{5, 6}``.

    If the minimum degree is at least 3, the maximum degree at most ``t``, no two
    vertices of degree ``t`` are adjacent or share a neighbour, and every vertex of degree
    ``t`` has a neighbour of degree other than ``t - 1``, then the number of vertices of
    degree ``t`` is at most the number of vertices of degree between 3 and ``t - 2``.
    """
    p = p.normalized()
    t = p.h + p.k
    if t not in (5, 6) or g.n == 0:
        return Verdict.skipped
    degrees = g.degrees()
    if degrees.min() < 3 or degrees.max() > t:
        return Verdict.skipped
    adj = g.adjacency
    top = [v for v in g.vertices if degrees[v] == t]
    if not top:
        return Verdict.skipped
    reached = 0
    for v in top:
        # adjacent or sharing a neighbour with an earlier top vertex
        if (adj[v] | (1 << v)) & reached:
            return Verdict.skipped
        if all(degrees[u] == t - 1 for u in iter_bits(adj[v])):
            return Verdict.skipped
        reached |= adj[v] | (1 << v)
    low = int(np.count_nonzero((degrees >= 3) & (degrees <= t - 2)))
    return _verdict(len(top) <= low)


def check_max_degree_seven(g: Graph, x: int) -> Verdict:
    """
    In a planar W_{2,5}-free graph with minimum degree at least 3 and maximum degree at
    most 7, a vertex of degree 7 has at most 14 vertices at distance two.
    """
    if g.degree(x) != 7 or g.max_degree() > 7 or not _standing(g, W25, 3):
        return Verdict.skipped
    return _verdict(second_neighborhood_bits(g, x).bit_count() <= 14)


# Instance generation


def _twin_hubs(t: int) -> Graph:
    """Two non-adjacent hubs, labelled 0 and 1, joined to ``t`` vertices of degree between 3 and ``t - 1``."""
    if t != 4:
        return bipyramid_graph(t)
    spokes = [(hub, 2 + i) for hub in (0, 1) for i in range(4)]
    return Graph.from_edges(6, spokes + [(2, 3), (4, 5)])


def _star_block(p: PatternSpec) -> Optional[Graph]:
    """
    W_{h,k}-free block whose vertex 0 has degree ``h + k`` and only neighbours of degree
    ``h + k - 1``, or None. For (2, 4) and (2, 5) no planar W_{h,k}-free graph of
    minimum degree 3 has such a vertex.
    """
    t = p.h + p.k
    if t == 5:
        return bipyramid_graph(5)
    if (p.h, p.k) != (1, 5):
        return None
    # hexagon around 0, two quadrilateral caps, two ears of degree 2
    rim = [(i, i % 6 + 1) for i in range(1, 7)]
    caps = [(7, i) for i in (1, 2, 3, 4)] + [(8, i) for i in (4, 5, 6, 1)]
    ears = [(9, 2), (9, 3), (10, 5), (10, 6)]
    return Graph.from_edges(11, [(0, i) for i in range(1, 7)] + rim + caps + ears)


def _six_six_blocks() -> List[Graph]:
    """
    W_{2,5}-free blocks with maximum degree 6 and minimum degree 3 around an edge 0-1
    joining two vertices of degree 6, with three common neighbours 2, 3 and 4. In the
    first block the fringe vertex 9 has one common neighbour, in the second it has none.
    """
    core = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (1, 7), (1, 8)]
    core += [(3, 4), (2, 5), (2, 7), (3, 6), (3, 8)]
    one_common = Graph.from_edges(10, core + [(6, 8), (2, 9), (5, 9), (7, 9)])
    k4 = [(a, b) for a, b in combinations(range(10, 14), 2)]
    no_common = Graph.from_edges(14, core + [(7, 8), (5, 9), (6, 9), (9, 10)] + k4)
    return [one_common, no_common]


def _planted_blocks(p: PatternSpec) -> List[Graph]:
    """Blocks on at most h + k + 2 vertices, hence W_{h,k}-free, that meet rare hypotheses."""
    t = p.h + p.k
    blocks = [wheel_graph(t), wheel_graph(t + 1), double_fan_graph(t - 1), bipyramid_graph(t)]
    if t >= 3:
        blocks.append(double_fan_graph(t - 2))
    if t == 4:
        blocks.append(_twin_hubs(t))
    return blocks


def _blocks(
    p: PatternSpec,
    n: int,
    min_degree: int,
    rng: np.random.Generator,
    plant_rate: float,
    max_block: Optional[int] = None,
):
    smallest = max(3, min_degree + 1)
    largest = max(smallest, p.h + p.k + 4 if max_block is None else max_block)
    planted = [b for b in _planted_blocks(p) if b.min_degree() >= min_degree and b.n <= largest]
    remaining = n
    while remaining > 0:
        fitting = [b for b in planted if b.n == remaining or remaining - b.n >= smallest]
        if fitting and rng.random() < plant_rate:
            block = fitting[int(rng.integers(len(fitting)))]
            yield block, True
            remaining -= block.n
            continue
        size = min(int(rng.integers(smallest, largest + 1)), remaining)
        if remaining - size < smallest:
            size = remaining
        yield random_stacked_triangulation(size, rng), False
        remaining -= size


def _thin(g: Graph, min_degree: int, rng: np.random.Generator) -> Graph:
    rate = rng.uniform(0.0, 0.2)
    for u, v in list(g.edges()):
        if rng.random() < rate and g.degree(u) > min_degree and g.degree(v) > min_degree:
            g = g.without_edge(u, v)
    return g


def _cap_degrees(g: Graph, max_degree: int, min_degree: int, rng: np.random.Generator) -> Graph:
    while g.max_degree() > max_degree:
        v = int(np.argmax(g.degrees()))
        options = sorted(g.neighbors(v), key=g.degree, reverse=True)
        preferred = [u for u in options if g.degree(u) > min_degree]
        pool = preferred or options
        top = [u for u in pool if g.degree(u) == g.degree(pool[0])]
        g = g.without_edge(v, top[int(rng.integers(len(top)))])
    return g


def _repair(g: Graph, p: PatternSpec, min_degree: int, rng: np.random.Generator) -> Graph:
    # every round deletes an edge, so at most m rounds are needed
    for _ in range(g.m + 1):
        embedding = find_w(g, p)
        if embedding is None:
            return g
        edges = embedding.tree_edges()
        preferred = [(a, b) for a, b in edges if g.degree(a) > min_degree and g.degree(b) > min_degree]
        pool = preferred or edges
        g = g.without_edge(*pool[int(rng.integers(len(pool)))])
    raise GenerationFailed(f"Could not remove every copy of {p}")


def generate_instance(
    p: PatternSpec,
    n: int,
    min_degree: int,
    max_degree: int,
    seed: Optional[int] = None,
    plant_rate: float = PLANT_RATE,
    planted: Sequence[Graph] = (),
    max_block: Optional[int] = None,
) -> Graph:
    """
    Random planar W_{h,k}-free graph with prescribed degree limits.

    The graph starts as a disjoint union of blocks: the ``planted`` components, random
    stacked triangulations and, with probability ``plant_rate`` each, small planted
    blocks (wheels, bipyramids, double fans) that meet the hypotheses of the structural
    lemmas. Random edges are deleted from the triangulations, degrees are capped at
    ``max_degree``, and one edge of every detected copy of W_{h,k} is deleted until none
    is left. Finally vertices are shuffled.

    Parameters
    ----------
    p : PatternSpec
        Forbidden pattern.
    n : int
        Number of vertices.
    min_degree, max_degree : int
        Degree limits, with ``min_degree <= max_degree <= n - 1``.
    seed : int or None, optional
        Seed of the random generator. Equal seeds give equal graphs.
    plant_rate : float, optional
        Probability that a block is a planted structure.
    planted : sequence of Graph, optional
        Planar W_{h,k}-free components included as they are. The vertices left over
        must number zero or at least ``max(3, min_degree + 1)``.
    max_block : int or None, optional
        Largest random block. Blocks on at most ``h + k + 2`` vertices cannot contain
        W_{h,k}, so the repair step leaves them alone.

    Returns
    -------
    g : Graph
        Planar W_{h,k}-free graph with maximum degree at most ``max_degree``.

    Raises
    ------
    UsageError
        If the degree limits are inconsistent or the planted components do not fit.
    GenerationFailed
        If the minimum degree of the result is below ``min_degree``; resample with
        another seed.
    """
    if not (0 <= min_degree <= max_degree <= n - 1):
        raise UsageError(
            f"Degree limits must satisfy 0 <= {min_degree} <= {max_degree} <= n - 1 = {n - 1}"
        )
    rest = n - sum(b.n for b in planted)
    if rest < 0 or (planted and 0 < rest < max(3, min_degree + 1)):
        raise UsageError(f"Planted components leave {rest} of {n} vertices")
    rng = np.random.default_rng(seed)
    if n <= 3 and not planted:
        g = complete_graph(n)
    else:
        blocks = list(planted)
        for block, kept in _blocks(p, rest, min_degree, rng, plant_rate, max_block):
            blocks.append(block if kept else _thin(block, min_degree, rng))
        g = disjoint_union(blocks)
    g = _cap_degrees(g, max_degree, min_degree, rng)
    g = _repair(g, p, min_degree, rng)
    if g.min_degree() < min_degree:
        raise GenerationFailed(f"Minimum degree {g.min_degree()} is below {min_degree}")
    return g.relabel([int(v) for v in rng.permutation(n)])


@dataclass(frozen=True)
class Profile:
    """
    Recipe for the instances of a suite.

    Parameters
    ----------
    name : str
    min_degree : int
    max_degree : int or None
        Degree cap, ``None`` for none.
    blocks : tuple of Graph
        Components planted in every instance.
    fill : bool
        Whether random blocks complete the instance to the sampled order.
    plant_rate : float
        Probability that a random block is a small planted structure.
    """

    name: str
    min_degree: int
    max_degree: Optional[int] = None
    blocks: Tuple[Graph, ...] = ()
    fill: bool = True
    plant_rate: float = PLANT_RATE

    def order(self, n: int) -> int:
        """Instance order closest to ``n`` that the profile can build."""
        forced = sum(b.n for b in self.blocks)
        if not self.fill:
            return forced
        n = max(n, self.min_degree + 1)
        if not self.blocks:
            return n
        return forced if n <= forced else max(n, forced + max(3, self.min_degree + 1))

    def instance(
        self, p: PatternSpec, n: int, seed: Optional[int] = None, max_block: Optional[int] = None
    ) -> Graph:
        n = self.order(n)
        cap = n - 1 if self.max_degree is None else min(self.max_degree, n - 1)
        return generate_instance(
            p,
            n,
            self.min_degree,
            max(cap, self.min_degree),
            seed=seed,
            plant_rate=self.plant_rate,
            planted=self.blocks,
            max_block=max_block,
        )


def suite_profiles(p: PatternSpec) -> List[Profile]:
    """
    Instance recipes of :func:`run_suite`.

    Four random profiles with minimum degree ``max(h + 1, 3)`` and a maximum degree of
    ``h + k - 1``, ``h + k``, ``h + k + 1`` or none, followed by profiles planting the
    structures that rarer hypotheses need: hubs of degree ``h + k + 1`` over sparse
    components, wheels of degree ``h + k``, a double fan, twin hubs, a star, the
    W_{2,5} blocks around an edge of degree 6, and a pendant edge.
    """
    p = p.normalized()
    t = p.h + p.k
    standing = max(p.h + 1, 3)
    profiles = [Profile(f"cap-{cap}", standing, cap) for cap in (t - 1, t, t + 1)]
    profiles.append(Profile("uncapped", standing))
    profiles.append(
        Profile("hubs", standing, t + 1, (wheel_graph(t + 1), wheel_graph(t), double_fan_graph(t - 1)), fill=False)
    )
    profiles.append(
        Profile("rims", standing, t, (wheel_graph(t), wheel_graph(max(t - 1, 3)), complete_graph(4)), fill=False)
    )
    profiles.append(Profile("book", standing, t, (double_fan_graph(t - 1),)))
    if t >= 4:
        profiles.append(Profile("twin-hubs", standing, t, (_twin_hubs(t),)))
    star = _star_block(p)
    if star is not None:
        profiles.append(Profile("star", p.h + 1, t, (star,)))
    if p == W25:
        profiles.append(Profile("six-six", 3, 6, tuple(_six_six_blocks())))
    # every planted block has at most slope * order edges
    profiles.append(Profile("pendant", 1, None, (path_graph(2),), plant_rate=1.0))
    return profiles


# Suites


def _each_vertex(check):
    return lambda g, p: _combine(check(g, p, x) for x in g.vertices)


def _each_oriented_edge(check):
    def run(g: Graph, p: PatternSpec) -> Verdict:
        return _combine(
            check(g, p, a, b) for u, v in g.edges() for a, b in ((u, v), (v, u))
        )

    return run


def _each_edge(check):
    return lambda g, p: _combine(check(g, p, u, v) for u, v in g.edges())


def _paths(g: Graph, p: PatternSpec) -> Verdict:
    return _combine(
        check_full_degree_path(g, p, x, y, z)
        for y in g.vertices
        for x, z in combinations(sorted(g.neighbors(y)), 2)
    )


def _w25(g: Graph, p: PatternSpec) -> Dict[str, Verdict]:
    collected: Dict[str, List[Verdict]] = {name: list() for name in W25_CLAIMS}
    for u, v in g.edges():
        for x, y in ((u, v), (v, u)):
            for name, verdict in check_w25_claims(g, x, y).items():
                collected[name].append(verdict)
    return {name: _combine(verdicts) for name, verdicts in collected.items()}


def _max_degree_seven(g: Graph, p: PatternSpec) -> Verdict:
    return _combine(check_max_degree_seven(g, x) for x in g.vertices)


def _components(g: Graph, p: PatternSpec) -> Verdict:
    slope = _slope(p)
    verdicts = list()
    for part in components(g):
        inner = g.induced_edge_count(part)
        verdicts.append(component_bound(slope, g.n, len(part), inner, g.m - inner))
    return _combine(verdicts)


def _low_degrees(g: Graph, p: PatternSpec) -> Verdict:
    slope = _slope(p)
    return _combine(
        low_degree_bound(slope, g.n, g.degree(x), g.m - g.degree(x)) for x in g.vertices
    )


def _neighborhood_numbers(g: Graph, p: PatternSpec) -> Verdict:
    verdicts = list()
    for x in g.vertices:
        if g.degree(x) < p.h + p.k + 1 or not _standing(g, p, p.h + 1):
            continue
        closed = g.closed_neighbors(x)
        inner = g.induced_edge_count(closed)
        verdicts.append(
            neighborhood_bound(p.h, p.k, g.n, g.degree(x), inner, g.m - inner)
        )
    return _combine(verdicts)


Runner = Callable[[Graph, PatternSpec], Union[Verdict, Dict[str, Verdict]]]

LEMMAS: Dict[str, Runner] = {
    "euler": lambda g, p: check_euler_lemma(g),
    "component": _each_vertex(check_component_lemma),
    "second-neighborhood": _each_vertex(check_second_neighborhood_lemma),
    "star": _each_vertex(check_star_lemma),
    "common-neighbor": _each_oriented_edge(check_common_neighbor_lemma),
    "full-degree-edge": _each_edge(check_full_degree_edge),
    "full-degree-path": _paths,
    "neighborhood-bound": _each_vertex(check_neighborhood_bound),
    "degree-census": check_degree_census,
    "component-bound": _components,
    "low-degree-bound": _low_degrees,
    "neighborhood-numbers": _neighborhood_numbers,
    "w25-claims": _w25,
    "max-degree-seven": _max_degree_seven,
}

# Only meaningful for W_{2,5}
W25_LEMMAS = ("w25-claims", "max-degree-seven")


def applicable_lemmas(p: PatternSpec) -> List[str]:
    """
    Lemma identifiers that apply to a pattern, in suite order.

    Lemmas whose hypotheses no admissible graph meets are left out: the star lemma
    unless ``h + k = 5`` or the pattern is W_{1,5}, the twin hub path for ``h + k = 3``,
    and the degree census outside of ``h + k`` in ``{5, 6}``.
    """
    p = p.normalized()
    t = p.h + p.k
    excluded = set()
    if _star_block(p) is None:
        excluded.add("star")
    if t < 4:
        excluded.add("full-degree-path")
    if t not in (5, 6):
        excluded.add("degree-census")
    if p != W25:
        excluded.update(W25_LEMMAS)
    return [name for name in LEMMAS if name not in excluded]


@dataclass
class LemmaReport:
    """
    Outcome of running one lemma over many instances.

    Parameters
    ----------
    lemma : str
        Lemma identifier, for example ``"component"`` or ``"w25-claims:fringe-size"``.
    instances : int
        Number of instances tested.
    hits : int
        Instances on which the hypotheses held at least once.
    skips : int
        Instances on which the hypotheses never held.
    violations : int
        Instances on which a conclusion failed. Always zero for a correct implementation.
    examples : dict
        graph6 string of one instance per verdict.
    min_hits : int
        Hits required for the suite to count as healthy.
    """

    lemma: str
    instances: int = 0
    hits: int = 0
    skips: int = 0
    violations: int = 0
    examples: Dict[str, str] = field(default_factory=dict)
    min_hits: int = 1

    def __repr__(self) -> str:
        return (
            f"< LemmaReport {self.lemma}: {self.instances} instances, "
            f"{self.hits} hits, {self.violations} violations >"
        )

    def record(self, verdict: Verdict, g: Graph) -> None:
        self.instances += 1
        if verdict is Verdict.skipped:
            self.skips += 1
        else:
            self.hits += 1
        if verdict is Verdict.violated:
            self.violations += 1
        self.examples.setdefault(verdict.value, g.to_graph6())

    @property
    def healthy(self) -> bool:
        """No violations, and the hypotheses were met often enough."""
        return self.violations == 0 and self.hits >= self.min_hits

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "lemma": self.lemma,
            "instances": self.instances,
            "hits": self.hits,
            "skips": self.skips,
            "violations": self.violations,
            "healthy": self.healthy,
            "examples": dict(sorted(self.examples.items())),
        }


def _sample_sizes(p: PatternSpec, n_range: Optional[Tuple[int, int]]) -> Tuple[int, int]:
    t = p.h + p.k
    low, high = n_range or (t + 2, 3 * (t + 2))
    if not (1 <= low <= high):
        raise UsageError(f"Invalid range of orders {low}..{high}")
    return low, high


def run_suite(
    p: PatternSpec,
    samples: int,
    seed: Optional[int] = None,
    lemmas: Optional[Sequence[str]] = None,
    n_range: Optional[Tuple[int, int]] = None,
    min_hits: int = 1,
) -> List[LemmaReport]:
    """
    Run lemma checks over randomly generated planar W_{h,k}-free graphs.

    Samples cycle through :func:`suite_profiles`, so that the hypotheses of every
    applicable lemma are met on a fair share of the instances. A sample whose instance
    misses its minimum degree is redrawn, with a new order, up to
    :data:`GENERATION_ATTEMPTS` times; the later attempts only use random blocks on at
    most ``h + k + 2`` vertices.

    Parameters
    ----------
    p : PatternSpec
        Pattern, with ``1 <= h <= 2 <= k <= 5`` after normalization.
    samples : int
        Number of instances.
    seed : int or None, optional
        Seed; equal seeds give equal reports.
    lemmas : sequence of str or None, optional
        Lemma identifiers from :data:`LEMMAS`. Defaults to :func:`applicable_lemmas`.
    n_range : (int, int) or None, optional
        Inclusive range of instance orders. Defaults to ``h + k + 2`` to ``3(h + k + 2)``.
    min_hits : int, optional
        Hits required for each report to be healthy.

    Returns
    -------
    reports : list of LemmaReport
        One report per lemma; the W_{2,5} claims get one report per claim, named
        ``"w25-claims:<claim>"``.

    Raises
    ------
    UsageError
        If a lemma identifier is unknown or ``n_range`` is invalid.
    UnsupportedRangeError
        If the pattern lies outside of the supported range.
    """
    p = p.normalized()
    check_range(p.h, p.k)
    ids = list(lemmas) if lemmas else applicable_lemmas(p)
    unknown = [name for name in ids if name not in LEMMAS]
    if unknown:
        raise UsageError(f"Unknown lemma(s): {', '.join(unknown)}")
    low, high = _sample_sizes(p, n_range)
    t = p.h + p.k

    reports: Dict[str, LemmaReport] = dict()
    for name in ids:
        claims = [f"{name}:{claim}" for claim in W25_CLAIMS] if name == "w25-claims" else [name]
        reports.update((claim, LemmaReport(claim, min_hits=min_hits)) for claim in claims)

    profiles = suite_profiles(p)
    rng = np.random.default_rng(seed)
    failures = 0
    for index in range(samples):
        profile = profiles[index % len(profiles)]
        g = None
        for attempt in range(GENERATION_ATTEMPTS):
            n = int(rng.integers(low, high + 1))
            # late attempts only use blocks too small to contain the pattern
            max_block = None if attempt < GENERATION_ATTEMPTS // 2 else t + 2
            try:
                g = profile.instance(p, n, seed=int(rng.integers(2**32)), max_block=max_block)
            except GenerationFailed:
                failures += 1
                continue
            break
        if g is None:
            log.debug("Sample %d: no %s instance", index, profile.name)
            continue

        for name in ids:
            outcome = LEMMAS[name](g, p)
            if isinstance(outcome, dict):
                for claim, verdict in outcome.items():
                    reports[f"{name}:{claim}"].record(verdict, g)
            else:
                reports[name].record(outcome, g)

    if failures:
        log.info("%d generated instances missed the minimum degree and were resampled", failures)
    for r in reports.values():
        log.info("%s", r)
        if r.violations:
            log.warning("%s violated on %d instances, e.g. %s", r.lemma, r.violations, r.examples["violated"])
    return list(reports.values())
