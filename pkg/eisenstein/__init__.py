"""Weight one Eisenstein series and their constant terms."""

from eisenstein.lvalues import LValue, compute_L0
from eisenstein.series import divisor_sum_coefficient, eisenstein_series, galois_conjugate_series

__all__ = [
    "LValue",
    "compute_L0",
    "divisor_sum_coefficient",
    "eisenstein_series",
    "galois_conjugate_series",
]
