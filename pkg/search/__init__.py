"""The partial weight one search, its holomorphy certificate and the Ramanujan diagnostic."""

from search.algorithm import (
    SearchInput,
    SearchReport,
    build_ratio_space,
    intersect_with_hecke,
    run_search,
    sweep_levels,
)
from search.certify import Certified, InjectivityFailure, NoMatch, certify_holomorphic
from search.ramanujan import normalized_coefficient_table, ramanujan_check

__all__ = [
    "Certified",
    "InjectivityFailure",
    "NoMatch",
    "SearchInput",
    "SearchReport",
    "build_ratio_space",
    "certify_holomorphic",
    "intersect_with_hecke",
    "normalized_coefficient_table",
    "ramanujan_check",
    "run_search",
    "sweep_levels",
]
