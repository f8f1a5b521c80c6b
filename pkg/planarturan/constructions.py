# -*- coding: utf-8 -*-
"""
Bounds on planar Turán numbers of quasi-double stars, and the dense W_{h,k}-free
planar graphs that realize the lower bounds.

All bound arithmetic is done with :class:`fractions.Fraction`; floors are taken only
when comparing against integer edge counts.
"""
import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import List, Optional, Tuple

from .graph import Graph, UsageError, complete_graph, disjoint_union
from .planarity import icosahedron, maximal_planar

log = logging.getLogger(__name__)

# Largest exact tail that best_witness hands to the extremal search
TAIL_SEARCH_LIMIT = 7


class UnsupportedRangeError(ValueError):
    """Raised when (h, k) lies outside of 1 <= h <= 2 <= k <= 5."""

    pass


def check_range(h: int, k: int) -> None:
    """
    Raises
    ------
    UnsupportedRangeError
        If the pattern parameters are not in 1 <= h <= 2 <= k <= 5.
    """
    if not (1 <= h <= 2 <= k <= 5):
        raise UnsupportedRangeError(
            f"Bounds are known for 1 <= h <= 2 <= k <= 5, got (h, k) = ({h}, {k})"
        )


@dataclass(frozen=True)
class BoundSpec:
    """
    Lower and upper bounds on the maximum number of edges of a planar W_{h,k}-free
    graph on ``n`` vertices.

    Parameters
    ----------
    h, k, n : int
        Pattern parameters and host order.
    lower : Fraction
        Certified lower bound: the edge count of the densest implemented construction.
    upper : Fraction
        Upper bound.
    theorem_lower : Fraction
        Linear lower bound attained by the witness families when ``n`` is a multiple of ``lower_divisor``.
    lower_divisor : int
        Block size of the construction attaining ``theorem_lower``.
    equality_divisor : int or None
        Lower and upper bounds coincide when ``n`` is a multiple of this value.
        ``None`` if no equality is known.
    """

    h: int
    k: int
    n: int
    lower: Fraction
    upper: Fraction
    theorem_lower: Fraction
    lower_divisor: int
    equality_divisor: Optional[int] = None

    @property
    def equality(self) -> bool:
        """Whether the equality condition holds at ``n``."""
        return self.equality_divisor is not None and self.n % self.equality_divisor == 0

    def equality_condition(self, n: int) -> bool:
        """Divisibility predicate under which lower and upper bounds coincide."""
        return self.equality_divisor is not None and n % self.equality_divisor == 0

    @property
    def lower_floor(self) -> int:
        return floor(self.lower)

    @property
    def upper_floor(self) -> int:
        return floor(self.upper)

    @property
    def gap(self) -> Fraction:
        return self.upper - self.lower

    @property
    def padded(self) -> bool:
        """Whether the lower bound comes from a construction padded for non-divisible ``n``."""
        return self.n % self.lower_divisor != 0

    def as_dict(self) -> dict:
        """Representation with rationals as ``[numerator, denominator]`` pairs."""
        as_pair = lambda q: [q.numerator, q.denominator]
        return {
            "h": self.h,
            "k": self.k,
            "n": self.n,
            "lower": as_pair(self.lower),
            "upper": as_pair(self.upper),
            "theorem_lower": as_pair(self.theorem_lower),
            "lower_floor": self.lower_floor,
            "upper_floor": self.upper_floor,
            "lower_divisor": self.lower_divisor,
            "equality_divisor": self.equality_divisor,
            "equality": self.equality,
        }


def _block_edges(size: int) -> int:
    """Edge count of the densest planar graph on ``size`` vertices."""
    if size >= 3:
        return 3 * size - 6
    return max(size - 1, 0)


def _plan(h: int, k: int, n: int) -> List[Tuple[str, int]]:
    """
    Densest available block decomposition of ``n`` vertices, as ``(kind, size)`` pairs.
    ``kind`` is either ``"triangulation"`` or ``"icosahedron"``.
    """
    block = h + k + 2

    def block_plan(size: int) -> List[Tuple[str, int]]:
        full, rest = divmod(size, block)
        plan = [("triangulation", block)] * full
        if rest:
            plan.append(("triangulation", rest))
        return plan

    candidates = [block_plan(n)]
    if k == 5 and n >= 12:
        full, rest = divmod(n, 12)
        candidates.append([("icosahedron", 12)] * full + (block_plan(rest) if rest else []))

    return max(candidates, key=_plan_edges)


def _plan_edges(plan: List[Tuple[str, int]]) -> int:
    return sum(30 if kind == "icosahedron" else _block_edges(size) for kind, size in plan)


def _plan_graph(plan: List[Tuple[str, int]]) -> Graph:
    parts = list()
    for kind, size in plan:
        if kind == "icosahedron":
            parts.append(icosahedron())
        elif size >= 3:
            parts.append(maximal_planar(size))
        else:
            parts.append(complete_graph(size))
    return disjoint_union(parts)


def bounds_for(h: int, k: int, n: int) -> BoundSpec:
    """
    Bounds on the planar Turán number of W_{h,k} for ``n`` vertices.

    * ``3 <= h + k <= 5``: upper bound ``3(h+k)n/(h+k+2)``, attained when ``(h+k+2) | n``;
    * ``(h, k) = (1, 5)``: upper bound ``5n/2``, attained by the icosahedral construction when ``12 | n``;
    * ``(h, k) = (2, 4)``: ``9n/4 <= ex <= 5n/2``;
    * ``(h, k) = (2, 5)``: ``5n/2 <= ex <= 17n/6``.

    The certified ``lower`` bound is the edge count of the construction returned by
    :func:`best_witness` without tail search.

    Parameters
    ----------
    h, k : int
        Pattern parameters, ``1 <= h <= 2 <= k <= 5``.
    n : int
        Number of vertices, at least 1.

    Returns
    -------
    bounds : BoundSpec

    Raises
    ------
    UnsupportedRangeError
        If ``(h, k)`` is outside of the supported range.
    UsageError
        If ``n < 1``.

    Examples
    --------
    >>> b = bounds_for(1, 2, 25)
    >>> b.upper, b.equality
    (Fraction(45, 1), True)
    """
    check_range(h, k)
    if n < 1:
        raise UsageError(f"Number of vertices must be positive, got {n}")

    s = h + k
    lower = Fraction(_plan_edges(_plan(h, k, n)))
    if s <= 5:
        upper = Fraction(3 * s * n, s + 2)
        return BoundSpec(h, k, n, lower, upper, upper, lower_divisor=s + 2, equality_divisor=s + 2)
    if (h, k) == (1, 5):
        return BoundSpec(h, k, n, lower, Fraction(5 * n, 2), Fraction(5 * n, 2), 12, equality_divisor=12)
    if (h, k) == (2, 4):
        return BoundSpec(h, k, n, lower, Fraction(5 * n, 2), Fraction(9 * n, 4), 8)
    return BoundSpec(h, k, n, lower, Fraction(17 * n, 6), Fraction(5 * n, 2), 12)


def block_union_witness(h: int, k: int, n: int) -> Graph:
    """
    Disjoint copies of the maximal planar graph on ``h + k + 2`` vertices.

    Raises
    ------
    UsageError
        If ``h + k + 2`` does not divide ``n``.

    Examples
    --------
    >>> block_union_witness(1, 2, 10).m
    18
    """
    block = h + k + 2
    if h < 0 or k < 0 or block < 3:
        raise UsageError(f"Invalid pattern parameters ({h}, {k})")
    if n < 1 or n % block:
        raise UsageError(f"Block size {block} does not divide n = {n}")
    return disjoint_union([maximal_planar(block)] * (n // block))


def icosa_union_witness(h: int, n: int) -> Graph:
    """
    Disjoint copies of the icosahedron. The result is 5-regular and W_{h,5}-free.

    Raises
    ------
    UsageError
        If ``12`` does not divide ``n``, or ``h`` is not 1 or 2.
    """
    if h not in (1, 2):
        raise UsageError(f"The icosahedral construction applies to h = 1 or 2, got {h}")
    if n < 1 or n % 12:
        raise UsageError(f"12 does not divide n = {n}")
    return disjoint_union([icosahedron()] * (n // 12))


def best_witness(h: int, k: int, n: int, tail_search: int = TAIL_SEARCH_LIMIT):
    """
    Densest available planar W_{h,k}-free graph on ``n`` vertices, with its certificate.

    When ``n`` is not a multiple of the block size, the remaining vertices form a
    maximal planar block of their own. If the last full block together with the remainder
    has at most ``tail_search`` vertices, it is replaced by an exact extremal graph when
    that is denser. Padded witnesses are labelled as heuristic lower bounds.

    Parameters
    ----------
    h, k : int
        Pattern parameters, ``1 <= h <= 2 <= k <= 5``.
    n : int
        Number of vertices, at least 1.
    tail_search : int, optional
        Largest tail handed to the exact search. Use 0 to disable.

    Returns
    -------
    witness : Graph
    certificate : Certificate

    Raises
    ------
    UnsupportedRangeError
        If ``(h, k)`` is outside of the supported range.
    """
    from .certificate import Provenance, certify
    from .patterns import PatternSpec

    bounds = bounds_for(h, k, n)
    plan = _plan(h, k, n)
    labels = list()
    padded = bounds.padded

    tail = None
    if padded and len(plan) >= 2:
        tail_size = plan[-1][1] + plan[-2][1]
        if tail_size <= tail_search:
            from .search import exact_ex

            result = exact_ex(tail_size, h, k)
            if result.exact and result.value > _plan_edges(plan[-2:]):
                log.info(
                    "Exact tail on %d vertices improves padding from %d to %d edges",
                    tail_size,
                    _plan_edges(plan[-2:]),
                    result.value,
                )
                tail = result.witness
                labels.append("exact tail")

    if tail is not None:
        head = plan[:-2]
        witness = disjoint_union(([_plan_graph(head)] if head else []) + [tail])
    else:
        witness = _plan_graph(plan)

    if padded:
        warnings.warn(
            f"{n} vertices is not a multiple of the block size; witness is a heuristic lower bound",
            UserWarning,
        )
        provenance = Provenance.heuristic
    else:
        provenance = Provenance.witness_family

    certificate = certify(witness, PatternSpec(h, k), provenance=provenance, labels=labels, bounds=bounds)
    return witness, certificate


def max_degree_sum_bound(g: Graph) -> Fraction:
    """
    Upper bound on the edge count from degrees along edges: since the sum over edges of
    ``d(x) + d(y)`` equals the sum of squared degrees, the Cauchy-Schwarz inequality gives
    ``e(G) <= max(d(x) + d(y)) * n / 4``.
    """
    degrees = g.degrees()
    largest = max((int(degrees[u] + degrees[v]) for u, v in g.edges()), default=0)
    return Fraction(largest * g.n, 4)
