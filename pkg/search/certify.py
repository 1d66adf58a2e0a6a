"""
Holomorphy certificate for a candidate f of weight [k,1] and character χ.

f is holomorphic once f^d is found in a space of holomorphic forms: here the
span of E_{1,χ^d}·g and T_q(E_{1,χ^d}·g) for g in an auxiliary space. The
identity f^d = h only holds on the box, so the space containing (f^d - h)·E^d
must be detected by its truncation; that is the rank check on the high space.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

from arithmetic.coeff_field import compositum
from arithmetic.ideals import PrincipalIdeal
from arithmetic.linalg import express_in_span, rank
from core.exceptions import FixtureValidationError, InvalidInputError
from core.logging_config import get_logger
from data_io.records import SpaceFixture
from eisenstein.series import eisenstein_series
from fourier.series import (
    TruncatedSeries,
    change_coeff_field,
    coefficient_vector,
    linear_combination,
    mul,
    power,
    truncate,
)
from hecke.operators import HeckeContext, apply_T, required_source_bound
from ray_class.characters import character_power
from search.algorithm import space_expansions

logger = get_logger(__name__)


@dataclass
class Certified:
    """f^d = g on the box, g in the span of the auxiliary products."""

    g: TruncatedSeries
    coefficients: List = field(default_factory=list)
    status: str = "Certified"


@dataclass
class InjectivityFailure:
    """The high space is not determined by its truncation at this bound."""

    rank: int
    dimension: int
    status: str = "InjectivityFailure"


@dataclass
class NoMatch:
    """f^d is not in the span of the auxiliary products."""

    span_dimension: int
    status: str = "NoMatch"


CertificationResult = Union[Certified, InjectivityFailure, NoMatch]


def _aux_spot_check(aux: Sequence[TruncatedSeries], ctx: HeckeContext, q: PrincipalIdeal) -> None:
    """T_q of the first auxiliary form must stay in the auxiliary span."""
    image = apply_T(ctx, q, aux[0])
    box = image.bound
    span = [coefficient_vector(truncate(g, box)) for g in aux]
    if express_in_span(span, coefficient_vector(image)) is None:
        raise FixtureValidationError("aux-space", "hecke-stability", f"T_{q} moves the first basis form out of the span")


def certify_holomorphic(
    f: TruncatedSeries,
    d: int,
    high_space: SpaceFixture,
    aux_space: SpaceFixture,
    q: PrincipalIdeal,
    level: Optional[PrincipalIdeal] = None,
) -> CertificationResult:
    """
    Decide whether f^d lies in span(E·aux) + T_q span(E·aux) on f's box.

    Raises:
        InvalidInputError: d is not an odd integer >= 3, or f has no character
        FixtureValidationError: the auxiliary space fails its Hecke spot check
    """
    if d < 3 or d % 2 == 0:
        raise InvalidInputError("power", f"expected an odd integer >= 3, got {d}")
    if f.character is None:
        raise InvalidInputError("candidate", "the candidate carries no character")
    level = level or aux_space.level
    bound = f.bound
    if f.is_zero():
        logger.info("Certified: zero candidate")
        return Certified(g=power(f, d))

    # (1) the truncation map on the high space must be injective
    high = space_expansions(high_space, bound)
    dimension = high_space.dimension if high_space.dimension is not None else len(high)
    found = rank([coefficient_vector(h) for h in high]) if high else 0
    if found < dimension:
        logger.info("Certification failed: truncation not injective", rank=found, dimension=dimension)
        return InjectivityFailure(found, dimension)

    # (2) f^d in span(E·aux, T_q(E·aux))
    chi_d = character_power(f.character, d)
    coeff_field = compositum(f.coeff_field, aux_space.coeff_field, chi_d.value_field)
    target = change_coeff_field(power(f, d), coeff_field)
    if aux_space.is_empty:
        products: List[TruncatedSeries] = []
    else:
        source = required_source_bound(bound, [q])
        aux = [change_coeff_field(g, coeff_field) for g in space_expansions(aux_space, source)]
        _aux_spot_check(aux, HeckeContext(level, aux_space.weight, None), q)
        eisenstein = eisenstein_series(chi_d, source, coeff_field)
        product_ctx = HeckeContext(level, eisenstein.weight + aux_space.weight, chi_d)
        products = []
        for g in aux:
            product = mul(eisenstein, g)
            products.append(truncate(product, bound))
            products.append(apply_T(product_ctx, q, product, target=bound))

    vector = coefficient_vector(target)
    span = [coefficient_vector(p) for p in products]
    coefficients = express_in_span(span, vector) if span else None
    if coefficients is None:
        logger.info("Certification failed: no match", span=len(products))
        return NoMatch(rank(span) if span else 0)
    g = linear_combination(coefficients, products, force_metadata=True)
    logger.info("Candidate certified holomorphic", power=d, span=len(products))
    return Certified(g=g, coefficients=coefficients)
