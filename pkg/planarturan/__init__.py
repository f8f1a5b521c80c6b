# -*- coding: utf-8 -*-
"""
This package constructs, detects, searches and certifies extremal planar graphs
avoiding quasi-double stars W_{h,k}.
"""
__author__ = "planarturan developers"
__email__ = "planarturan@users.noreply.github.com"
__license__ = "GPLv3"
__version__ = "1.0.1"

from .graph import (
    DegreeCensus,
    Graph,
    UsageError,
    bipyramid_graph,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_census,
    disjoint_union,
    double_fan_graph,
    empty_graph,
    neighbors,
    path_graph,
    second_neighborhood,
    star_graph,
    wheel_graph,
)
from .planarity import (
    EulerVerdict,
    diameter,
    euler_filter,
    has_kuratowski_minor,
    icosahedron,
    is_planar,
    maximal_planar,
    random_stacked_triangulation,
    stacked_triangulation,
)
from .patterns import (
    CaterpillarSpec,
    PatternSpec,
    WEmbedding,
    contains_caterpillar,
    contains_double_star,
    contains_subgraph_oracle,
    contains_w,
    find_double_star,
    find_subgraph,
    find_w,
    is_free,
)
from .constructions import (
    BoundSpec,
    UnsupportedRangeError,
    best_witness,
    block_union_witness,
    bounds_for,
    check_range,
    icosa_union_witness,
    max_degree_sum_bound,
)
from .writers import graph6_encode, write_certificate, write_graph6
from .parsers import ParseError, graph6_decode, iter_graph6, load_certificate, read_graph6
from .certificate import Certificate, CertificateError, Provenance, certify
from .search import (
    SearchBudget,
    SearchError,
    SearchResult,
    canonical_form,
    enumerate_graphs,
    exact_ex,
)
from .lemmas import (
    EdgeNeighborhoodPartition,
    GenerationFailed,
    LemmaReport,
    Profile,
    Verdict,
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
    component_bound,
    euler_bound,
    generate_instance,
    low_degree_bound,
    neighborhood_bound,
    run_suite,
    suite_profiles,
)
