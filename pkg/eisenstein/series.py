"""
The weight [1,1] Eisenstein series

    E_{1,ψ} = L(ψ,0)/4 + Σ_{α ≫ 0} (Σ_{m | (α)} ψ(m)) q^α

for a totally odd ray class character ψ, with ψ(m) = 0 when m meets the conductor.
"""

from dataclasses import replace
from fractions import Fraction
from typing import Optional

from arithmetic.base_field import get_base_field
from arithmetic.box import TruncationBound, enumerate_box
from arithmetic.coeff_field import CoeffElement, CoeffField
from arithmetic.ideals import PrincipalIdeal, ideal_divisors
from core.exceptions import InvalidInputError, NotTotallyOddError
from core.logging_config import get_logger
from eisenstein.lvalues import LValue, compute_L0
from fourier.series import TruncatedSeries, WeightPair, map_coefficients, zero_series
from ray_class.characters import RayCharacter, character_inverse, is_totally_odd

logger = get_logger(__name__)

EISENSTEIN_WEIGHT = WeightPair(1, 1)


def divisor_sum_coefficient(
    psi: RayCharacter, a: PrincipalIdeal, target: Optional[CoeffField] = None
) -> CoeffElement:
    """Σ_{m | a} ψ(m)."""
    field = target or psi.value_field
    total = field.zero()
    for m in ideal_divisors(a):
        total = total + psi.evaluate_or_zero(m, target=field)
    return total


def eisenstein_series(
    psi: RayCharacter,
    bound: TruncationBound,
    coeff_field: Optional[CoeffField] = None,
    lvalue: Optional[LValue] = None,
) -> TruncatedSeries:
    """
    E_{1,ψ} on the box, over coeff_field (default: the value field of ψ).

    Raises:
        NotTotallyOddError: ψ is not odd at both real places
    """
    if not is_totally_odd(psi):
        raise NotTotallyOddError(psi)
    coeff_field = coeff_field or psi.value_field
    lvalue = lvalue or compute_L0(psi)
    base = get_base_field(psi.modulus.d)
    template = zero_series(base, coeff_field, EISENSTEIN_WEIGHT, bound, psi)
    coeffs = {}
    for alpha in enumerate_box(base, bound):
        value = divisor_sum_coefficient(psi, PrincipalIdeal.from_element(alpha), coeff_field)
        if value:
            coeffs[alpha] = value
    constant = coeff_field.coerce(lvalue.value) * Fraction(1, 4)
    logger.debug("Eisenstein series built", character=psi, bound=bound, terms=len(coeffs))
    return replace(template, constant=constant, coeffs=coeffs)


def galois_conjugate_series(s: TruncatedSeries, mask: int) -> TruncatedSeries:
    """
    Apply the automorphism negating the radicals in mask to every coefficient.

    The character becomes ψ^σ: inverted when σ moves the roots of unity ψ takes.
    """
    conjugated = map_coefficients(s, lambda value: value.galois(mask))
    psi = s.character
    if psi is None or psi.order <= 2:
        return conjugated
    root_radicand = psi.value_field.radicands[0]
    if not s.coeff_field.contains(psi.value_field):
        raise InvalidInputError("coeff_field", f"{s.coeff_field} does not hold the values of {psi}")
    if bin(mask & s.coeff_field.radical_mask(root_radicand)).count("1") % 2:
        return replace(conjugated, character=character_inverse(psi))
    return conjugated
