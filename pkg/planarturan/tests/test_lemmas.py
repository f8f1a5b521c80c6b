# -*- coding: utf-8 -*-
from fractions import Fraction

import numpy as np
import pytest

from planarturan import (
    EdgeNeighborhoodPartition,
    GenerationFailed,
    LemmaReport,
    PatternSpec,
    UnsupportedRangeError,
    UsageError,
    Verdict,
    bipyramid_graph,
    check_common_neighbor_lemma,
    check_component_lemma,
    check_degree_census,
    check_euler_lemma,
    check_full_degree_edge,
    check_full_degree_path,
    check_max_degree_seven,
    check_neighborhood_bound,
    check_second_neighborhood_lemma,
    check_star_lemma,
    check_w25_claims,
    complete_bipartite_graph,
    complete_graph,
    component_bound,
    cycle_graph,
    double_fan_graph,
    euler_bound,
    generate_instance,
    icosahedron,
    is_free,
    is_planar,
    low_degree_bound,
    maximal_planar,
    neighborhood_bound,
    path_graph,
    run_suite,
    suite_profiles,
    wheel_graph,
)
from planarturan.lemmas import LEMMAS, W25_CLAIMS, applicable_lemmas

PATTERNS = [(1, 2), (1, 3), (2, 2), (1, 4), (2, 3), (1, 5), (2, 4), (2, 5)]


def test_euler_bound():
    assert euler_bound(12, 30) is Verdict.held
    assert euler_bound(5, 10) is Verdict.violated
    assert euler_bound(6, 9, bipartite=True) is Verdict.violated
    assert euler_bound(2, 1) is Verdict.skipped


def test_euler_lemma():
    assert check_euler_lemma(icosahedron()) is Verdict.held
    assert check_euler_lemma(cycle_graph(6)) is Verdict.held
    assert check_euler_lemma(complete_bipartite_graph(3, 3)) is Verdict.skipped
    assert check_euler_lemma(path_graph(2)) is Verdict.skipped


def test_component_bound():
    """Test the extension of a linear bound over a small component"""
    assert component_bound(Fraction(5, 2), 24, 12, 30, 30) is Verdict.held
    # component too large for the slope
    assert component_bound(Fraction(5, 2), 24, 13, 33, 27) is Verdict.skipped
    assert component_bound(3, 24, 12, 30, 30) is Verdict.skipped
    # rest of the graph above the bound
    assert component_bound(Fraction(5, 2), 24, 12, 30, 31) is Verdict.skipped


def test_neighborhood_bound():
    assert neighborhood_bound(1, 3, 6, 5, 12, 0) is Verdict.held
    assert neighborhood_bound(1, 3, 6, 4, 12, 0) is Verdict.skipped
    assert neighborhood_bound(1, 3, 6, 5, 13, 0) is Verdict.skipped


def test_low_degree_bound():
    assert low_degree_bound(Fraction(5, 2), 10, 2, 22) is Verdict.held
    assert low_degree_bound(Fraction(5, 2), 10, 2, 23) is Verdict.skipped
    assert low_degree_bound(Fraction(5, 2), 10, 3, 10) is Verdict.skipped


def test_component_lemma():
    """Test that a vertex of degree h + k + 1 spans a component with its neighbours"""
    g = maximal_planar(6)
    x = int(np.argmax(g.degrees()))
    assert g.degree(x) == 5
    assert check_component_lemma(g, PatternSpec(1, 3), x) is Verdict.held
    assert check_component_lemma(wheel_graph(4), PatternSpec(1, 2), 0) is Verdict.held
    # the rim and the hub form a path on 5 vertices
    assert check_component_lemma(wheel_graph(4), PatternSpec(1, 1), 0) is Verdict.skipped


def test_component_lemma_not_free():
    """Test that graphs containing the pattern are skipped"""
    g = icosahedron()
    assert not is_free(g, PatternSpec(1, 2))
    assert check_component_lemma(g, PatternSpec(1, 2), 0) is Verdict.skipped


def test_component_lemma_normalizes():
    g = maximal_planar(6)
    x = int(np.argmax(g.degrees()))
    assert check_component_lemma(g, PatternSpec(3, 1), x) is Verdict.held


def test_second_neighborhood_lemma():
    g = bipyramid_graph(5)
    assert check_second_neighborhood_lemma(g, PatternSpec(1, 4), 0) is Verdict.held
    assert check_second_neighborhood_lemma(g, PatternSpec(1, 4), 2) is Verdict.skipped


def test_star_lemma():
    """Test the star lemma on the pentagonal bipyramid, whose apexes see each other at distance two"""
    g = bipyramid_graph(5)
    assert check_star_lemma(g, PatternSpec(1, 4), 0) is Verdict.held
    assert check_star_lemma(g, PatternSpec(2, 3), 1) is Verdict.held
    # rim vertices of the wheel have degree 3, not 4
    assert check_star_lemma(wheel_graph(5), PatternSpec(1, 4), 0) is Verdict.skipped
    # needs h + k >= 5
    assert check_star_lemma(bipyramid_graph(4), PatternSpec(1, 3), 0) is Verdict.skipped


@pytest.mark.parametrize("h, k", [(1, 2), (1, 3), (2, 2), (2, 3), (1, 4), (2, 5)])
def test_common_neighbor_lemma(h, k):
    """Test that the hub of a wheel and a rim vertex share enough neighbours"""
    g = wheel_graph(k + 2)
    assert check_common_neighbor_lemma(g, PatternSpec(h, k), 0, 1) is Verdict.held
    # the larger degree must come first
    assert check_common_neighbor_lemma(g, PatternSpec(h, k), 1, 0) is Verdict.skipped


def test_common_neighbor_lemma_small_degrees():
    assert check_common_neighbor_lemma(complete_graph(4), PatternSpec(1, 2), 0, 1) is Verdict.skipped
    assert check_common_neighbor_lemma(path_graph(3), PatternSpec(1, 2), 0, 2) is Verdict.skipped


@pytest.mark.parametrize("h, k", [(1, 3), (2, 3), (1, 4), (2, 4)])
def test_full_degree_edge(h, k):
    g = double_fan_graph(h + k - 1)
    assert g.degree(0) == g.degree(1) == h + k
    assert check_full_degree_edge(g, PatternSpec(h, k), 0, 1) is Verdict.held


def test_full_degree_edge_not_free():
    assert check_full_degree_edge(icosahedron(), PatternSpec(1, 4), 0, 1) is Verdict.skipped


def test_full_degree_edge_minimum_degree():
    """Test that minimum degree 2 does not meet the hypotheses"""
    g = double_fan_graph(3).with_vertex([2]).with_vertex([5, 4])
    assert g.min_degree() == 2
    assert check_full_degree_edge(g, PatternSpec(1, 3), 0, 1) is Verdict.skipped


@pytest.mark.parametrize("h, k", [(1, 4), (2, 3), (2, 4)])
def test_full_degree_path(h, k):
    """Test that the apexes of a bipyramid have the same neighbourhood"""
    g = bipyramid_graph(h + k)
    assert check_full_degree_path(g, PatternSpec(h, k), 0, 2, 1) is Verdict.held
    # adjacent ends
    assert check_full_degree_path(g, PatternSpec(h, k), 0, 2, 3) is Verdict.skipped


def test_edge_partition():
    part = EdgeNeighborhoodPartition.from_edge(path_graph(5), 1, 2)
    assert part.common == frozenset()
    assert part.private_x == {0}
    assert part.private_y == {3}
    assert part.closure == {0, 1, 2, 3}
    assert part.outside == {4}
    assert part.fringe == {4}
    assert part.fringe_degree4 == frozenset()
    assert part.well_formed(path_graph(5))


def test_edge_partition_wheel():
    g = wheel_graph(5)
    part = EdgeNeighborhoodPartition.from_edge(g, 0, 1)
    assert part.common == {2, 5}
    assert part.private_x == {3, 4}
    assert part.private_y == frozenset()
    assert part.outside == frozenset()
    assert part.well_formed(g)


def test_edge_partition_non_edge():
    with pytest.raises(UsageError):
        EdgeNeighborhoodPartition.from_edge(path_graph(5), 0, 2)


def test_w25_claims_empty_fringe():
    """Test that the fringe claims are skipped around the apexes of a double fan, which have no fringe"""
    verdicts = check_w25_claims(double_fan_graph(5), 0, 1)
    assert set(verdicts) == set(W25_CLAIMS)
    assert verdicts["private-neighbours"] is Verdict.held
    assert all(verdicts[name] is Verdict.skipped for name in W25_CLAIMS[1:])


def six_six_blocks():
    return {profile.name: profile for profile in suite_profiles(PatternSpec(2, 5))}["six-six"].blocks


@pytest.mark.parametrize("x, y", [(0, 1), (1, 0)])
def test_w25_claims(x, y):
    """Test the W_{2,5} claims around an edge of degree 6 with a non-empty fringe"""
    one_common, no_common = six_six_blocks()
    for g in (one_common, no_common):
        assert is_planar(g)
        assert is_free(g, PatternSpec(2, 5))
        assert g.min_degree() == 3 and g.max_degree() == 6
        assert EdgeNeighborhoodPartition.from_edge(g, x, y).fringe == {9}

    verdicts = check_w25_claims(one_common, x, y)
    assert verdicts["fringe-without-common"] is Verdict.skipped
    assert all(v is Verdict.held for name, v in verdicts.items() if name != "fringe-without-common")

    verdicts = check_w25_claims(no_common, x, y)
    assert verdicts["fringe-one-common"] is Verdict.skipped
    assert all(v is Verdict.held for name, v in verdicts.items() if name != "fringe-one-common")


def test_w25_claims_skipped():
    verdicts = check_w25_claims(icosahedron(), 0, 1)
    assert all(v is Verdict.skipped for v in verdicts.values())


def test_max_degree_seven():
    assert check_max_degree_seven(wheel_graph(7), 0) is Verdict.held
    assert check_max_degree_seven(wheel_graph(6), 0) is Verdict.skipped


def test_degree_census():
    assert check_degree_census(wheel_graph(5), PatternSpec(1, 4)) is Verdict.held
    # no vertex of degree 5
    assert check_degree_census(bipyramid_graph(4), PatternSpec(1, 4)) is Verdict.skipped
    # the two apexes share their neighbours
    assert check_degree_census(bipyramid_graph(5), PatternSpec(1, 4)) is Verdict.skipped
    assert check_degree_census(wheel_graph(5), PatternSpec(1, 2)) is Verdict.skipped


def test_neighborhood_bound_check():
    g = maximal_planar(6)
    assert check_neighborhood_bound(g, PatternSpec(1, 3), 0) is Verdict.held


def test_generate_instance():
    """Test that generated instances are planar, W-free and respect the maximum degree"""
    p = PatternSpec(1, 5)
    for seed in range(10):
        g = generate_instance(p, 12, 0, 6, seed=seed)
        assert g.n == 12
        assert g.max_degree() <= 6
        assert is_planar(g)
        assert is_free(g, p)


def test_generate_instance_minimum_degree():
    """Test that instances either meet the minimum degree or fail loudly"""
    p = PatternSpec(1, 2)
    for seed in range(20):
        try:
            g = generate_instance(p, 10, 3, 9, seed=seed)
        except GenerationFailed:
            continue
        assert g.min_degree() >= 3
        assert is_free(g, p)


def test_generate_instance_reproducible():
    p = PatternSpec(2, 3)
    assert generate_instance(p, 15, 0, 14, seed=7) == generate_instance(p, 15, 0, 14, seed=7)


def test_generate_instance_small():
    assert generate_instance(PatternSpec(1, 2), 3, 0, 2, seed=1) == complete_graph(3)


@pytest.mark.parametrize("n, low, high", [(5, 3, 2), (5, 0, 5), (5, -1, 2)])
def test_generate_instance_invalid_degrees(n, low, high):
    with pytest.raises(UsageError):
        generate_instance(PatternSpec(1, 2), n, low, high)


def test_applicable_lemmas():
    assert "w25-claims" not in applicable_lemmas(PatternSpec(1, 4))
    assert "w25-claims" in applicable_lemmas(PatternSpec(5, 2))
    assert set(applicable_lemmas(PatternSpec(2, 5))) == set(LEMMAS) - {"star", "degree-census"}
    assert "full-degree-path" not in applicable_lemmas(PatternSpec(1, 2))
    assert "star" in applicable_lemmas(PatternSpec(1, 5))
    assert "star" not in applicable_lemmas(PatternSpec(2, 4))
    assert "degree-census" in applicable_lemmas(PatternSpec(2, 4))
    assert "degree-census" not in applicable_lemmas(PatternSpec(1, 3))


def profile_blocks(h, k, name):
    return {profile.name: profile for profile in suite_profiles(PatternSpec(h, k))}[name].blocks


@pytest.mark.parametrize("h, k", [(1, 4), (2, 3), (1, 5)])
def test_star_block(h, k):
    """Test that the planted star meets the hypotheses of the star lemma"""
    p = PatternSpec(h, k)
    (g,) = profile_blocks(h, k, "star")
    assert is_planar(g)
    assert is_free(g, p)
    assert g.min_degree() >= h + 1
    assert check_star_lemma(g, p, 0) is Verdict.held


def test_star_block_missing():
    names = [profile.name for profile in suite_profiles(PatternSpec(2, 4))]
    assert "star" not in names
    assert "six-six" not in names


@pytest.mark.parametrize("h, k", [(1, 3), (2, 2), (2, 3), (2, 5)])
def test_twin_hubs_block(h, k):
    """Test that the twin hubs meet the hypotheses of the path lemma"""
    p = PatternSpec(h, k)
    (g,) = profile_blocks(h, k, "twin-hubs")
    assert is_free(g, p)
    assert check_full_degree_path(g, p, 0, 2, 1) is Verdict.held


@pytest.mark.parametrize("h, k", PATTERNS)
def test_pendant_profile(h, k):
    """Test that instances with a pendant edge meet the low degree hypotheses"""
    p = PatternSpec(h, k)
    (profile,) = [profile for profile in suite_profiles(p) if profile.name == "pendant"]
    for seed in range(5):
        g = profile.instance(p, 3 * (h + k + 2), seed=seed)
        assert g.min_degree() == 1
        assert is_free(g, p)
        assert LEMMAS["low-degree-bound"](g, p) is Verdict.held


def test_profile_order():
    p = PatternSpec(1, 2)
    profiles = {profile.name: profile for profile in suite_profiles(p)}
    # pendant edge plus at least three more vertices
    assert profiles["pendant"].order(3) == 5
    assert profiles["pendant"].order(2) == 2
    assert profiles["hubs"].order(30) == 5 + 4 + 4
    assert profiles["uncapped"].order(2) == 4


def test_generate_instance_planted():
    p = PatternSpec(2, 5)
    blocks = six_six_blocks()
    g = generate_instance(p, 30, 3, 6, seed=2, planted=blocks)
    assert g.n == 30
    assert g.max_degree() <= 6
    assert is_free(g, p)
    with pytest.raises(UsageError):
        generate_instance(p, 26, 3, 6, seed=2, planted=blocks)


def test_lemma_report():
    report = LemmaReport("component")
    assert not report.healthy
    report.record(Verdict.skipped, complete_graph(3))
    assert not report.healthy
    report.record(Verdict.held, complete_graph(4))
    assert report.healthy
    assert report.as_dict()["examples"] == {"held": "C~", "skipped": "Bw"}
    report.record(Verdict.violated, complete_graph(3))
    assert not report.healthy
    assert report.violations == 1


def test_run_suite():
    """Test that no lemma is violated on random instances"""
    reports = run_suite(PatternSpec(1, 4), samples=20, seed=0)
    assert [r.lemma for r in reports] == applicable_lemmas(PatternSpec(1, 4))
    for r in reports:
        assert r.violations == 0
        assert r.instances <= 20


@pytest.mark.parametrize("h, k", PATTERNS)
def test_run_suite_hits(h, k):
    """Test that every applicable lemma meets its hypotheses on its planted family"""
    p = PatternSpec(h, k)
    reports = run_suite(p, samples=3 * len(suite_profiles(p)), seed=0)
    for r in reports:
        assert r.violations == 0
        assert r.hits >= 1, r.lemma


@pytest.mark.slow
@pytest.mark.parametrize("h, k", PATTERNS)
def test_run_suite_healthy(h, k):
    """Test every lemma on ten thousand instances with a hundred hits each"""
    reports = run_suite(PatternSpec(h, k), samples=10**4, seed=0, min_hits=100)
    for r in reports:
        assert r.healthy, r


def test_run_suite_reproducible():
    first = run_suite(PatternSpec(1, 2), samples=10, seed=3, lemmas=["euler", "component"])
    second = run_suite(PatternSpec(1, 2), samples=10, seed=3, lemmas=["euler", "component"])
    assert [r.as_dict() for r in first] == [r.as_dict() for r in second]


def test_run_suite_w25_claims():
    """Test that every W_{2,5} claim gets its own report"""
    reports = run_suite(PatternSpec(2, 5), samples=5, seed=1, lemmas=["w25-claims"])
    assert [r.lemma for r in reports] == [f"w25-claims:{claim}" for claim in W25_CLAIMS]
    assert all(r.violations == 0 for r in reports)


def test_run_suite_invalid():
    with pytest.raises(UsageError):
        run_suite(PatternSpec(1, 2), samples=1, lemmas=["nope"])
    with pytest.raises(UnsupportedRangeError):
        run_suite(PatternSpec(3, 3), samples=1)
    with pytest.raises(UsageError):
        run_suite(PatternSpec(1, 2), samples=1, n_range=(5, 4))
