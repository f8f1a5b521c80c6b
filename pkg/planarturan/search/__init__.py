# -*- coding: utf-8 -*-
"""
Isomorph-free enumeration and exact extremal search
"""

from .canonical import CanonicalForm, canonical_form, canonical_graph, canonical_labeling
from .common import SearchBudget, SearchError, SearchResult, default_threads
from .extremal import ENGINES, exact_ex, max_planar_edges
from .generation import (
    HereditaryFilter,
    enumerate_graphs,
    free_filter,
    planar_filter,
    planar_free_filter,
)
