# -*- coding: utf-8 -*-
"""
Self-contained, re-verifiable records of planar W_{h,k}-free graphs.
"""
from dataclasses import astuple, dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum, unique
from fractions import Fraction
from typing import Optional, Tuple

from .constructions import BoundSpec, UnsupportedRangeError, bounds_for
from .graph import Graph
from .parsers import graph6_decode
from .patterns import PatternSpec, is_free
from .planarity import is_planar
from .writers import graph6_encode, tool_signature

SCHEMA_VERSION = 1


class CertificateError(ValueError):
    """Raised when a certificate does not agree with its own payload."""

    pass


@unique
class Provenance(Enum):
    """Origin of the graph recorded in a certificate."""

    witness_family = "witness family"
    heuristic = "heuristic lower bound"
    search = "search result"
    user = "user input"


@dataclass(frozen=True)
class Certificate:
    """
    Verifiable record of a graph, a pattern, and how the graph compares to the known bounds.

    Parameters
    ----------
    graph6 : str
        graph6 encoding of the graph.
    n, m : int
        Vertex and edge counts.
    h, k : int
        Pattern parameters.
    planar, pattern_free : bool
        Verdicts recorded by the producing run.
    provenance : Provenance
        Origin of the graph.
    bounds : BoundSpec or None
        Bounds for ``(h, k, n)``, if ``(h, k)`` is in the supported range.
    labels : tuple of str
        Free-form qualifiers, e.g. ``"derived"`` for exact values not covered by known bounds.
    search : dict or None
        Statistics of the extremal search that produced the graph.
    tool_version : str
    timestamp : str
        ISO 8601 time of creation, UTC.
    schema_version : int
    """

    graph6: str
    n: int
    m: int
    h: int
    k: int
    planar: bool
    pattern_free: bool
    provenance: Provenance
    bounds: Optional[BoundSpec] = None
    labels: Tuple[str, ...] = tuple()
    search: Optional[dict] = None
    tool_version: str = field(default_factory=tool_signature)
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    schema_version: int = SCHEMA_VERSION

    def __repr__(self) -> str:
        return (
            f"< Certificate for {self.provenance.value} on {self.n} vertices and {self.m} edges, "
            f"W_{{{self.h},{self.k}}}-free: {self.pattern_free} >"
        )

    @property
    def graph(self) -> Graph:
        return graph6_decode(self.graph6)

    @property
    def pattern(self) -> PatternSpec:
        return PatternSpec(self.h, self.k)

    @property
    def within_bounds(self) -> Optional[bool]:
        """Whether planar W_{h,k}-free graphs respect the upper bound; ``None`` without bounds."""
        if self.bounds is None:
            return None
        if not (self.planar and self.pattern_free):
            return True
        return self.m <= self.bounds.upper_floor

    def verify(self) -> "Certificate":
        """
        Recompute every verdict from the graph6 payload.

        Returns
        -------
        certificate : Certificate
            This certificate, for chaining.

        Raises
        ------
        CertificateError
            If a recorded field disagrees with the recomputed one, or if a planar
            W_{h,k}-free graph exceeds the recorded upper bound.
        """
        g = self.graph
        recomputed = {
            "n": g.n,
            "m": g.m,
            "planar": is_planar(g),
            "pattern_free": is_free(g, self.pattern),
        }
        for name, value in recomputed.items():
            if getattr(self, name) != value:
                raise CertificateError(
                    f"Recorded {name} = {getattr(self, name)!r} but the graph gives {value!r}"
                )
        if self.bounds is not None:
            expected = bounds_for(self.bounds.h, self.bounds.k, self.n)
            if expected != self.bounds:
                raise CertificateError("Recorded bounds differ from the bounds for this pattern and order")
        if self.within_bounds is False:
            raise CertificateError(
                f"Planar W_{{{self.h},{self.k}}}-free graph with {self.m} edges exceeds the upper bound {self.bounds.upper}"
            )
        return self

    def as_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "pattern": [self.h, self.k],
            "planar": self.planar,
            "pattern_free": self.pattern_free,
            "bounds": None if self.bounds is None else self.bounds.as_dict(),
            "provenance": self.provenance.value,
            "labels": list(self.labels),
            "search": self.search,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "Certificate":
        """
        Build a certificate from its dictionary form. Fields are not verified; see :meth:`verify`.

        Raises
        ------
        KeyError
            If a required field is missing.
        CertificateError
            If the schema version is not supported.
        """
        if payload["schema_version"] != SCHEMA_VERSION:
            raise CertificateError(f"Unsupported certificate schema {payload['schema_version']}")
        h, k = payload["pattern"]
        bounds = payload.get("bounds")
        if bounds is not None:
            as_fraction = lambda pair: Fraction(*pair)
            bounds = BoundSpec(
                h=bounds["h"],
                k=bounds["k"],
                n=bounds["n"],
                lower=as_fraction(bounds["lower"]),
                upper=as_fraction(bounds["upper"]),
                theorem_lower=as_fraction(bounds["theorem_lower"]),
                lower_divisor=bounds["lower_divisor"],
                equality_divisor=bounds["equality_divisor"],
            )
        return cls(
            graph6=payload["graph6"],
            n=payload["n"],
            m=payload["m"],
            h=h,
            k=k,
            planar=payload["planar"],
            pattern_free=payload["pattern_free"],
            provenance=Provenance(payload["provenance"]),
            bounds=bounds,
            labels=tuple(payload.get("labels", ())),
            search=payload.get("search"),
            tool_version=payload["tool_version"],
            timestamp=payload["timestamp"],
            schema_version=payload["schema_version"],
        )

    def with_labels(self, *labels: str) -> "Certificate":
        return replace(self, labels=self.labels + tuple(labels))


def certify(
    g: Graph,
    p: PatternSpec,
    provenance: Provenance = Provenance.user,
    labels=tuple(),
    search: Optional[dict] = None,
    bounds: Optional[BoundSpec] = None,
) -> Certificate:
    """
    Compute every verdict for a graph and wrap it into a certificate.

    Bounds are attached when ``(h, k)`` lies in the supported range.

    Parameters
    ----------
    g : Graph
        Graph to certify.
    p : PatternSpec
        Pattern.
    provenance : Provenance, optional
        Origin of the graph.
    labels : iterable of str, optional
    search : dict or None, optional
        Search statistics to embed.
    bounds : BoundSpec or None, optional
        Precomputed bounds; computed if possible when not provided.
    """
    if bounds is None and g.n >= 1:
        try:
            bounds = bounds_for(*astuple(p.normalized()), g.n)
        except UnsupportedRangeError:
            bounds = None
    return Certificate(
        graph6=graph6_encode(g),
        n=g.n,
        m=g.m,
        h=p.h,
        k=p.k,
        planar=is_planar(g),
        pattern_free=is_free(g, p),
        provenance=provenance,
        bounds=bounds,
        labels=tuple(labels),
        search=search,
    )
