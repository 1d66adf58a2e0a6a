"""Quadratic twist characters and complex multiplication checks."""

from cm.twists import CMResult, cm_test, cm_twist_candidates, cm_upper_bound

__all__ = ["CMResult", "cm_test", "cm_twist_candidates", "cm_upper_bound"]
