"""Toolkit for (t,lambda)-liking digraphs: digraphs in which every set of
t vertices has exactly lambda common out-neighbors.

Core surface: exact liking checks and structural validators (liking),
loop-free bitmask digraphs with .dg file I/O (digraph), canonical forms
(canon), exhaustive isomorph-free cataloging (search), symmetric design
extraction (designs), and a one-shot claim-verification suite
(verification).  The likedg CLI binds all of it.
"""

from .canon import CANON_MAX_ORDER, are_isomorphic, canonical_digraph, \
    canonical_form, digraph_from_key
from .designs import Design, DesignCheck, DesignCounts, check_hughes_bound, \
    design_counts, extract_design, read_design, verify_design, write_design
from .digraph import Digraph, MAX_ORDER, build, common_in_neighbors, \
    common_out_neighbors, complete_digraph, degree_sequences, double_graph, \
    induced_subdigraph, read_digraph, write_digraph
from .fixtures import nondiregular_22_example
from .liking import ConditionVector, LikingProfile, LikingReport, binomial, \
    check_counting_identity, check_degree_balance, \
    check_degree_binomial_inequality, check_degree_product_inequality, \
    check_liking, check_order_and_mindegree, check_subset_expansion, \
    completeness_conditions, derived_liking_digraph, liking_profile
from .search import Catalog, RangeReport, SearchConfig, SearchStats, \
    brute_force_oracle, catalog_to_text, enumerate_liking, enumerate_range, \
    parse_catalog_text
from .verification import ClaimResult, VerificationReport, run_verification
from . import errors

__version__ = "0.1.0"

__all__ = [
    "CANON_MAX_ORDER", "MAX_ORDER", "Catalog", "ClaimResult",
    "ConditionVector", "Design", "DesignCheck", "DesignCounts", "Digraph",
    "LikingProfile", "LikingReport", "RangeReport", "SearchConfig",
    "SearchStats", "VerificationReport", "are_isomorphic", "binomial",
    "brute_force_oracle", "build", "canonical_digraph", "canonical_form",
    "catalog_to_text", "check_counting_identity", "check_degree_balance",
    "check_degree_binomial_inequality", "check_degree_product_inequality",
    "check_hughes_bound", "check_liking", "check_order_and_mindegree",
    "check_subset_expansion", "common_in_neighbors", "common_out_neighbors",
    "complete_digraph", "completeness_conditions", "degree_sequences",
    "derived_liking_digraph", "design_counts", "digraph_from_key",
    "double_graph", "enumerate_liking", "enumerate_range", "errors",
    "extract_design", "induced_subdigraph", "liking_profile",
    "nondiregular_22_example", "parse_catalog_text", "read_design",
    "read_digraph", "run_verification", "verify_design", "write_design",
    "write_digraph",
]
