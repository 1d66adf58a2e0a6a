"""Hecke operators, newform reconstruction and oldform maps."""

from hecke.newforms import oldform_map, reconstruct_expansion, span_old_space
from hecke.operators import HeckeContext, apply_T, hecke_eigenvalue_scalar, required_source_bound
from hecke.spectral import characteristic_polynomial, diagonalize, hecke_matrix, splitting_radical

__all__ = [
    "HeckeContext",
    "apply_T",
    "characteristic_polynomial",
    "diagonalize",
    "hecke_eigenvalue_scalar",
    "hecke_matrix",
    "oldform_map",
    "reconstruct_expansion",
    "required_source_bound",
    "span_old_space",
    "splitting_radical",
]
