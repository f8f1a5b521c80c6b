# -*- coding: utf-8 -*-
from fractions import Fraction
from warnings import catch_warnings, filterwarnings

import pytest

from planarturan import (
    PatternSpec,
    Provenance,
    UnsupportedRangeError,
    UsageError,
    best_witness,
    block_union_witness,
    bounds_for,
    check_range,
    icosa_union_witness,
    icosahedron,
    is_free,
    is_planar,
    max_degree_sum_bound,
)


@pytest.mark.parametrize("h, k", [(1, 1), (0, 2), (3, 3), (1, 6), (2, 1)])
def test_unsupported_range(h, k):
    with pytest.raises(UnsupportedRangeError):
        check_range(h, k)
    with pytest.raises(UnsupportedRangeError):
        bounds_for(h, k, 12)


def test_invalid_order():
    with pytest.raises(UsageError):
        bounds_for(1, 2, 0)


def test_bounds_equality():
    """Test the bounds where lower and upper bounds coincide"""
    b = bounds_for(1, 2, 25)
    assert b.upper == Fraction(45)
    assert b.lower == Fraction(45)
    assert b.equality
    assert not b.padded
    assert b.gap == 0
    assert b.equality_condition(10)
    assert not b.equality_condition(11)


def test_bounds_15():
    b = bounds_for(1, 5, 12)
    assert b.lower == 30
    assert b.upper == 30
    assert b.equality


def test_bounds_25():
    """Test that the (2, 5) bounds never meet"""
    b = bounds_for(2, 5, 12)
    assert b.lower == 30
    assert b.upper == 34
    assert b.upper_floor == 34
    assert not b.equality
    assert b.equality_divisor is None


def test_bounds_24():
    b = bounds_for(2, 4, 16)
    assert b.theorem_lower == 36
    assert b.lower == 36
    assert b.upper == 40
    assert not b.equality


def test_bounds_rational():
    """Test that bounds are kept as exact rationals, and floored only on request"""
    b = bounds_for(1, 3, 7)
    assert b.upper == Fraction(84, 6)
    b = bounds_for(1, 2, 7)
    assert b.upper == Fraction(63, 5)
    assert b.upper_floor == 12
    assert b.lower == 10
    assert b.padded


def test_bounds_as_dict():
    d = bounds_for(1, 2, 7).as_dict()
    assert d["upper"] == [63, 5]
    assert d["upper_floor"] == 12
    assert d["equality"] is False


@pytest.mark.parametrize(
    "h, k, n, edges",
    [(1, 2, 15, 27), (1, 3, 18, 36), (2, 2, 18, 36), (1, 4, 21, 45), (2, 3, 21, 45), (1, 2, 10, 18)],
)
def test_block_union_witness(h, k, n, edges):
    """Test that block unions are planar, W-free and meet the upper bound"""
    g = block_union_witness(h, k, n)
    assert g.n == n
    assert g.m == edges
    assert is_planar(g)
    assert is_free(g, PatternSpec(h, k))
    assert g.m == bounds_for(h, k, n).upper


def test_block_union_witness_divisibility():
    with pytest.raises(UsageError):
        block_union_witness(1, 2, 12)


@pytest.mark.parametrize("h", [1, 2])
def test_icosa_union_witness(h):
    g = icosa_union_witness(h, 24)
    assert g.m == 60
    assert set(g.degrees().tolist()) == {5}
    assert is_planar(g)
    assert is_free(g, PatternSpec(h, 5))


def test_icosa_union_witness_invalid():
    with pytest.raises(UsageError):
        icosa_union_witness(1, 18)
    with pytest.raises(UsageError):
        icosa_union_witness(3, 12)


@pytest.mark.parametrize("h, k", [(1, 5), (2, 5)])
def test_best_witness_icosahedral(h, k):
    witness, certificate = best_witness(h, k, 24)
    assert witness.m == 60
    assert certificate.provenance is Provenance.witness_family
    assert certificate.planar
    assert certificate.pattern_free
    certificate.verify()


def test_best_witness_padded():
    """Test that padded witnesses warn and are labelled as heuristic"""
    with pytest.warns(UserWarning):
        witness, certificate = best_witness(1, 2, 7, tail_search=0)
    assert witness.m == 10
    assert certificate.provenance is Provenance.heuristic
    assert "exact tail" not in certificate.labels
    certificate.verify()


def test_best_witness_exact_tail():
    """Test that the exact tail never makes a witness sparser"""
    with catch_warnings():
        filterwarnings("ignore", category=UserWarning)
        witness, certificate = best_witness(1, 2, 7)
    assert witness.n == 7
    assert witness.m >= 10
    assert witness.m <= bounds_for(1, 2, 7).upper_floor
    assert is_planar(witness)
    assert is_free(witness, PatternSpec(1, 2))


def test_max_degree_sum_bound():
    assert max_degree_sum_bound(icosahedron()) == 30
    assert max_degree_sum_bound(block_union_witness(1, 2, 5)) == Fraction(8 * 5, 4)
