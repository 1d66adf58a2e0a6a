"""
Hecke operators T_q acting on truncated Fourier expansions.

For π the canonical generator of a prime q:
    c_α(T_q f) = c_{απ} + π2^{k2-k1} N(q)^{k1-1} χ(q) c_{α/π}   (q ∤ n)
    c_α(T_q f) = c_{απ}                                        (q ∥ n)
The output box is the largest one on which every needed input coefficient is
available.
"""

from dataclasses import dataclass, replace
from typing import Dict, Iterable, Optional

from arithmetic.base_field import FieldElement
from arithmetic.box import TruncationBound, enumerate_box
from arithmetic.coeff_field import CoeffElement
from arithmetic.ideals import PrincipalIdeal, factor_ideal, is_prime_ideal
from config.settings import settings
from core.exceptions import (
    BadLevelRelationError,
    InsufficientBoundError,
    InvalidInputError,
    MetadataMismatchError,
    NotPrimeError,
)
from core.logging_config import get_logger
from fourier.series import TruncatedSeries, WeightPair
from ray_class.characters import RayCharacter

logger = get_logger(__name__)


@dataclass(frozen=True)
class HeckeContext:
    """Level, weight and character of the space T_q acts on."""

    level: PrincipalIdeal
    weight: WeightPair
    character: Optional[RayCharacter] = None

    def __post_init__(self):
        if self.character is not None and not self.character.conductor.finite_part.divides(self.level):
            raise InvalidInputError(
                "character", f"conductor {self.character.conductor} does not divide the level {self.level}"
            )

    def character_value(self, q: PrincipalIdeal, series: TruncatedSeries) -> CoeffElement:
        if self.character is None:
            return series.coeff_field.one()
        return self.character.evaluate(q, target=series.coeff_field)

    def divides_level(self, q: PrincipalIdeal) -> bool:
        return q.divides(self.level)


def _shrink_factor(pi: FieldElement) -> FieldElement:
    """max(π, 1/π) under embedding 1."""
    inverse = pi.inverse()
    return pi if (pi - inverse).real_sign() >= 0 else inverse


def hecke_output_bound(bound: TruncationBound, q: PrincipalIdeal, scaling: Optional[str] = None) -> TruncationBound:
    """
    Box on which T_q f is determined by f on `bound`: (b_i / max(π_i, 1/π_i)),
    or (b_i / N(q)) under norm scaling (never larger than the former).
    """
    scaling = scaling or settings.HECKE_BOUND_SCALING
    pi = q.gen
    per_embedding = TruncationBound(
        bound.b1 / _shrink_factor(pi),
        bound.b2 / _shrink_factor(pi.conjugate()),
    )
    if scaling == "embedding":
        return per_embedding
    norm_scaled = TruncationBound(bound.b1 / q.norm, bound.b2 / q.norm)
    return norm_scaled.meet(per_embedding)


def required_source_bound(
    target: TruncationBound, primes: Iterable[PrincipalIdeal], scaling: Optional[str] = None
) -> TruncationBound:
    """Smallest box whose image under each T_q in turn covers target."""
    scaling = scaling or settings.HECKE_BOUND_SCALING
    bound = target
    for q in primes:
        pi = q.gen
        if scaling == "embedding":
            bound = TruncationBound(bound.b1 * _shrink_factor(pi), bound.b2 * _shrink_factor(pi.conjugate()))
        else:
            bound = TruncationBound(
                bound.b1 * _max(q.norm, _shrink_factor(pi)),
                bound.b2 * _max(q.norm, _shrink_factor(pi.conjugate())),
            )
    return bound


def _max(n: int, x: FieldElement) -> FieldElement:
    return x if (x - n).real_sign() >= 0 else FieldElement.rational(n, x.d)


def _check_prime(ctx: HeckeContext, q: PrincipalIdeal) -> bool:
    """Validate q; True when q exactly divides the level."""
    if not is_prime_ideal(q):
        raise NotPrimeError(q)
    if not ctx.divides_level(q):
        return False
    if factor_ideal(ctx.level).get(q, 0) > 1:
        raise BadLevelRelationError(q, ctx.level)
    return True


def apply_T(
    ctx: HeckeContext,
    q: PrincipalIdeal,
    s: TruncatedSeries,
    target: Optional[TruncationBound] = None,
) -> TruncatedSeries:
    """
    T_q s on the shrunken box (or on target, which must fit inside it).

    Raises:
        NotPrimeError: q is not a prime ideal
        BadLevelRelationError: q^2 divides the level
        InsufficientBoundError: target is not covered by the input box
    """
    at_level = _check_prime(ctx, q)
    if s.weight != ctx.weight:
        raise MetadataMismatchError("weight", s.weight, ctx.weight)
    output = hecke_output_bound(s.bound, q)
    if target is not None:
        if not target.fits_in(output):
            raise InsufficientBoundError(target, output, f"T_{q} needs the input box scaled by {q.gen}")
        output = target

    pi = q.gen
    coeff_field = s.coeff_field
    if at_level:
        factor = coeff_field.zero()
    else:
        k1, k2 = ctx.weight.k1, ctx.weight.k2
        factor = (
            coeff_field.embed_base(pi.conjugate() ** (k2 - k1))
            * (q.norm ** (k1 - 1))
            * ctx.character_value(q, s)
        )

    coeffs: Dict[FieldElement, CoeffElement] = {}
    for alpha in enumerate_box(s.field, output):
        value = s.coefficient(alpha * pi)
        if factor:
            quotient = alpha / pi
            if quotient.is_integral():
                value = value + factor * s.coefficient(quotient)
        if value:
            coeffs[alpha] = value
    constant = s.constant if at_level else s.constant * (1 + factor)
    logger.debug("Hecke operator applied", prime=q, bound=output, terms=len(coeffs))
    return replace(s, bound=output, constant=constant, coeffs=coeffs, weight=ctx.weight, character=ctx.character or s.character)


def hecke_eigenvalue_scalar(ctx: HeckeContext, q: PrincipalIdeal, c_q: CoeffElement) -> CoeffElement:
    """
    The eigenvalue λ of T_q on an eigenform whose normalised coefficient is
    c(q) = λ·π2^{(k1-k2)/2}.
    """
    h = ctx.weight.half_difference()
    return c_q * c_q.field.embed_base(q.gen.conjugate() ** (-h))
