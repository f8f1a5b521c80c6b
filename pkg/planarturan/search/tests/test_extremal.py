# -*- coding: utf-8 -*-
from warnings import catch_warnings, filterwarnings

import pytest

from planarturan import PatternSpec, UsageError, bounds_for, is_free, is_planar
from planarturan.search import SearchBudget, SearchError, default_threads, exact_ex
from planarturan.search.extremal import max_planar_edges


@pytest.mark.parametrize("n, h, k, value", [(4, 1, 2, 6), (5, 1, 2, 9), (6, 1, 3, 12), (6, 2, 2, 12)])
def test_exact_values(n, h, k, value):
    """Test exact values on graphs too small to contain the pattern, or just large enough"""
    result = exact_ex(n, h, k, threads=1)
    assert result.value == value
    assert result.exact
    assert result.bound_consistent
    assert result.witness.m == value
    assert is_planar(result.witness)
    assert is_free(result.witness, PatternSpec(h, k))


def test_exact_trivially_free():
    """Test that every planar graph on 7 vertices avoids W_{1,4}"""
    assert exact_ex(7, 1, 4, threads=1).value == 15


@pytest.mark.parametrize("h, k", [(1, 2), (1, 3), (2, 2)])
def test_engines_agree(h, k):
    augment = exact_ex(6, h, k, engine="augment", threads=1)
    descend = exact_ex(6, h, k, engine="descend")
    assert augment.value == descend.value
    assert augment.engine == "augment"
    assert descend.engine == "descend"


@pytest.mark.slow
@pytest.mark.parametrize("h, k", [(1, 2), (1, 3), (2, 2), (1, 4), (2, 3), (1, 5), (2, 4), (2, 5)])
@pytest.mark.parametrize("n", range(3, 8))
def test_engines_agree_everywhere(n, h, k):
    """Test that both engines find the same value and a valid witness for every supported pattern"""
    augment = exact_ex(n, h, k, engine="augment", threads=1)
    descend = exact_ex(n, h, k, engine="descend")
    assert augment.value == descend.value
    for result in (augment, descend):
        assert result.witness.m == result.value
        assert is_planar(result.witness)
        assert is_free(result.witness, PatternSpec(h, k))


def test_threads_agree():
    """Test that the value and the witness do not depend on the number of workers"""
    single = exact_ex(7, 1, 2, threads=1)
    pooled = exact_ex(7, 1, 2, threads=2)
    assert single.value == pooled.value
    assert single.witness == pooled.witness


@pytest.mark.slow
@pytest.mark.parametrize("h, k", [(1, 2), (1, 3), (2, 2), (1, 4), (2, 3)])
def test_below_upper_bound(h, k):
    for n in range(3, 9):
        result = exact_ex(n, h, k, threads=1)
        assert result.value <= min(max_planar_edges(n), bounds_for(h, k, n).upper_floor)


def test_budget():
    """Test that an exhausted budget gives a partial result and a warning"""
    with pytest.warns(UserWarning):
        result = exact_ex(7, 1, 2, budget=SearchBudget(max_nodes=5), threads=1)
    assert not result.exact
    assert result.nodes_explored <= 6
    assert "partial" in repr(result)


def test_statistics():
    result = exact_ex(6, 1, 2, threads=1)
    stats = result.as_dict()
    assert stats["value"] == result.value
    assert stats["exact"]
    assert stats["nodes_explored"] > 0
    assert "pattern" in stats["pruning"]


@pytest.mark.parametrize("n", [0, 11])
def test_order_limit(n):
    with pytest.raises(UsageError):
        exact_ex(n, 1, 2)


def test_unknown_engine():
    with pytest.raises(SearchError):
        exact_ex(5, 1, 2, engine="sideways")


def test_unsupported_pattern():
    """Test that patterns without known bounds are searched, and only checked against 3n - 6"""
    with catch_warnings():
        filterwarnings("error", category=UserWarning)
        result = exact_ex(6, 1, 1, threads=1)
    assert result.bound_consistent
    assert is_free(result.witness, PatternSpec(1, 1))


def test_default_threads(monkeypatch):
    monkeypatch.delenv("PLANAR_TURAN_THREADS", raising=False)
    assert default_threads() == 1
    monkeypatch.setenv("PLANAR_TURAN_THREADS", "3")
    assert default_threads() == 3
    monkeypatch.setenv("PLANAR_TURAN_THREADS", "many")
    with pytest.warns(UserWarning):
        assert default_threads() == 1


def test_budget_split():
    assert SearchBudget(max_nodes=10).split(3) == SearchBudget(max_nodes=3)
    assert SearchBudget().split(3) == SearchBudget()
