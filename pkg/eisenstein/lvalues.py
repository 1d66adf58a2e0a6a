"""
L(ψ, 0) for totally odd ray class characters of a real quadratic field.

The exact value is a finite sum over one Shintani cone: with c the positive
integer generating f ∩ Z and η the totally positive fundamental unit, the cone
spanned by v1 = c and v2 = c·η is a fundamental domain for the totally
positive units, and

    L(ψ, 0) = Σ_x ψ((x)) [B1(t1)B1(t2) + Tr(η)/4 (B2(t1) + B2(t2))]

over x = t1·v1 + t2·v2 in O_F with 0 < t1 <= 1, 0 <= t2 < 1, x coprime to f.

The numeric cross-check sums the smoothed Dirichlet series from the functional
equation of Λ(s) = A^{s/2} Γ_R(s+1)^2 L(s, ψ), A = d_F·N(f):

    L(0) = Σ a_n G0(n/√A) + W Σ conj(a_n) G1(n/√A)
    G0(x) = (2/π) ∫_{2πx}^∞ K0,   G1(x) = (2/π) K1(2πx)

with the root number W read off θ(1/t) = W t conj-θ(t) at t = 1.1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import Iterator, List, Optional, Tuple

import mpmath
from sympy import Rational, bernoulli

from arithmetic.base_field import FieldElement, get_base_field
from arithmetic.coeff_field import CoeffElement
from arithmetic.ideals import PrincipalIdeal, ideals_of_norm
from arithmetic.residues import residue_ring
from config.settings import settings
from core.exceptions import NonInvertibleConstantError, NotTotallyOddError, NumericMismatchError
from core.logging_config import get_logger
from ray_class.characters import RayCharacter, is_totally_odd

logger = get_logger(__name__)

ROOT_NUMBER_POINT = mpmath.mpf(11) / 10


@dataclass(frozen=True)
class LValue:
    """Exact L(ψ,0) with its numeric cross-check."""

    character: RayCharacter
    value: CoeffElement
    numeric: Optional[complex] = None
    root_number: Optional[complex] = None
    agreement: Optional[float] = None

    def __str__(self) -> str:
        return f"L({self.character}, 0) = {self.value}"


def bernoulli_value(n: int, t: Fraction) -> Fraction:
    """The Bernoulli polynomial B_n at a rational point."""
    value = bernoulli(n, Rational(t.numerator, t.denominator))
    return Fraction(int(value.p), int(value.q))


# ==================== Exact value ====================


def _cone_points(psi: RayCharacter) -> Iterator[Tuple[FieldElement, Fraction, Fraction]]:
    """(x, t1, t2) for every x in O_F in the half-open fundamental parallelogram of the cone."""
    field = get_base_field(psi.modulus.d)
    conductor = psi.conductor.finite_part
    c = residue_ring(conductor).c
    eta = field.tp_fundamental_unit
    omega = field.omega
    # y(x) = t2·c·y(η) in [0, c·y(η)), x(x) - t2·c·x(η) = t1·c in (0, c]
    y_limit = c * eta.y
    b_max = floor(y_limit / omega.y)
    for b in range(b_max + 1):
        a_low = floor(-b * omega.x) - 1
        a_high = ceil(c * (1 + eta.x) - b * omega.x) + 1
        for a in range(a_low, a_high + 1):
            x = field.from_integral(a, b)
            t2 = x.y / y_limit
            t1 = (x.x - t2 * c * eta.x) / c
            if 0 < t1 <= 1 and 0 <= t2 < 1:
                yield x, t1, t2


def shintani_L0(psi: RayCharacter) -> CoeffElement:
    field = get_base_field(psi.modulus.d)
    trace = field.tp_fundamental_unit.trace()
    value_field = psi.value_field
    ring = residue_ring(psi.conductor.finite_part)
    total = value_field.zero()
    points = 0
    for x, t1, t2 in _cone_points(psi):
        if not ring.is_unit(ring.reduce(x)):
            continue
        weight = bernoulli_value(1, t1) * bernoulli_value(1, t2) + trace / 4 * (
            bernoulli_value(2, t1) + bernoulli_value(2, t2)
        )
        if weight:
            total = total + psi.evaluate(PrincipalIdeal.from_element(x)) * weight
        points += 1
    logger.debug("Shintani cone summed", character=psi, points=points)
    return total


# ==================== Numeric cross-check ====================


def dirichlet_coefficients(psi: RayCharacter, count: int) -> List[mpmath.mpc]:
    """a_n = Σ_{N(a) = n} ψ(a) for n = 1..count, as complex numbers (index 0 unused)."""
    d = psi.modulus.d
    coefficients = [mpmath.mpc(0)]
    for n in range(1, count + 1):
        total = psi.value_field.zero()
        for a in ideals_of_norm(n, d):
            total = total + psi.evaluate_or_zero(a)
        coefficients.append(total.to_complex() if total else mpmath.mpc(0))
    return coefficients


def _phi(x) -> mpmath.mpf:
    return 4 * x * mpmath.besselk(0, 2 * mpmath.pi * x)


def _theta(coefficients: List[mpmath.mpc], y, sqrt_a, conjugate: bool = False) -> mpmath.mpc:
    total = mpmath.mpc(0)
    for n in range(1, len(coefficients)):
        a = coefficients[n]
        if a:
            total += (mpmath.conj(a) if conjugate else a) * _phi(n * y / sqrt_a)
    return total


def numeric_L0(psi: RayCharacter, dps: Optional[int] = None) -> Tuple[mpmath.mpc, mpmath.mpc]:
    """(L(ψ,0), W) from the smoothed functional equation sum."""
    dps = dps or settings.NUMERIC_DPS
    field = get_base_field(psi.modulus.d)
    with mpmath.workdps(dps):
        conductor_norm = psi.conductor.finite_part.norm
        sqrt_a = mpmath.sqrt(field.discriminant * conductor_norm)
        # terms decay like exp(-2π n y/√A); y is at least 1/1.1
        digits = (dps + 10) * mpmath.log(10)
        count = int(mpmath.ceil(sqrt_a * digits * ROOT_NUMBER_POINT / (2 * mpmath.pi))) + 1
        coefficients = dirichlet_coefficients(psi, count)

        t = ROOT_NUMBER_POINT
        root_number = _theta(coefficients, 1 / t, sqrt_a) / (t * _theta(coefficients, t, sqrt_a, conjugate=True))

        value = mpmath.mpc(0)
        for n in range(1, count + 1):
            a = coefficients[n]
            if not a:
                continue
            x = n / sqrt_a
            g0 = 2 / mpmath.pi * mpmath.quad(lambda v: mpmath.besselk(0, v), [2 * mpmath.pi * x, mpmath.inf])
            g1 = 2 / mpmath.pi * mpmath.besselk(1, 2 * mpmath.pi * x)
            value += a * g0 + root_number * mpmath.conj(a) * g1
    return value, root_number


# ==================== Public entry point ====================


@lru_cache(maxsize=64)
def compute_L0(psi: RayCharacter, check: bool = True) -> LValue:
    """
    Exact L(ψ, 0), cross-checked numerically unless check is False.

    Raises:
        NotTotallyOddError: ψ is not odd at both real places
        NumericMismatchError: exact and numeric values disagree, or |W| != 1
        NonInvertibleConstantError: L(ψ, 0) vanishes
    """
    if not is_totally_odd(psi):
        raise NotTotallyOddError(psi)
    exact = shintani_L0(psi)
    if exact.is_zero():
        raise NonInvertibleConstantError()
    if not check:
        return LValue(character=psi, value=exact)

    tolerance = settings.L_VALUE_TOLERANCE
    numeric, root_number = numeric_L0(psi)
    if abs(abs(root_number) - 1) > tolerance:
        raise NumericMismatchError(1, abs(root_number), tolerance)
    expected = exact.to_complex()
    agreement = float(abs(expected - numeric))
    if agreement > tolerance:
        raise NumericMismatchError(exact, complex(numeric), tolerance)
    logger.info("L-value computed", character=psi, value=exact, agreement=agreement)
    return LValue(
        character=psi,
        value=exact,
        numeric=complex(numeric),
        root_number=complex(root_number),
        agreement=agreement,
    )
