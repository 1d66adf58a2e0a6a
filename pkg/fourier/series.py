"""
Truncated Fourier expansions of Hilbert modular forms.

A series keeps the constant term and the coefficients c_α at the totally
positive α inside its box. Missing keys are zero. Weight and character are
metadata: they fix normalisation exponents and are checked for consistency,
but never change how coefficients are combined.
"""

from dataclasses import dataclass, field as dataclass_field, replace
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union

from arithmetic.base_field import BaseField, FieldElement
from arithmetic.box import TruncationBound, enumerate_box
from arithmetic.coeff_field import CoeffElement, CoeffField
from arithmetic.ideals import PrincipalIdeal
from core.exceptions import (
    BoundTooLargeError,
    InvalidInputError,
    MetadataMismatchError,
    NonInvertibleConstantError,
    NotAUnitError,
    OddWeightDifferenceError,
    OutOfBoxError,
)
from ray_class.characters import (
    RayCharacter,
    characters_agree,
    inverse_optional,
    multiply_optional,
)

Scalar = Union[int, Fraction, CoeffElement]

UNIT_SEARCH_RANGE = 8


@dataclass(frozen=True)
class WeightPair:
    """The weight [k1, k2]."""

    k1: int
    k2: int

    def __post_init__(self):
        if self.k1 < 0 or self.k2 < 0:
            raise InvalidInputError("weight", f"[{self.k1},{self.k2}] has a negative entry")

    @classmethod
    def parse(cls, text: str) -> "WeightPair":
        try:
            k1, k2 = (int(part) for part in text.replace("[", "").replace("]", "").split(","))
        except ValueError:
            raise InvalidInputError("weight", f"expected 'k1,k2', got {text!r}")
        return cls(k1, k2)

    def half_difference(self) -> int:
        """(k1 - k2)/2, defined when k1 ≡ k2 mod 2."""
        if (self.k1 - self.k2) % 2:
            raise OddWeightDifferenceError(self.k1, self.k2)
        return (self.k1 - self.k2) // 2

    def __add__(self, other: "WeightPair") -> "WeightPair":
        return WeightPair(self.k1 + other.k1, self.k2 + other.k2)

    def __sub__(self, other: "WeightPair") -> "WeightPair":
        return WeightPair(self.k1 - other.k1, self.k2 - other.k2)

    def scaled(self, n: int) -> "WeightPair":
        return WeightPair(self.k1 * n, self.k2 * n)

    def __str__(self) -> str:
        return f"[{self.k1},{self.k2}]"


@dataclass(frozen=True)
class TruncatedSeries:
    """A formal Fourier expansion truncated to a box, with weight and character metadata."""

    field: BaseField
    coeff_field: CoeffField
    weight: WeightPair
    character: Optional[RayCharacter]
    bound: TruncationBound
    constant: CoeffElement
    coeffs: Dict[FieldElement, CoeffElement] = dataclass_field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.bound.d != self.field.d:
            raise InvalidInputError("bound", f"bound over Q(√{self.bound.d}) for {self.field}")
        cleaned: Dict[FieldElement, CoeffElement] = {}
        for alpha, value in self.coeffs.items():
            if value.field != self.coeff_field:
                value = self.coeff_field.coerce(value)
            if value.is_zero():
                continue
            if not alpha.is_totally_positive() or not self.bound.contains(alpha):
                raise OutOfBoxError(alpha, self.bound)
            cleaned[alpha] = value
        constant = self.constant
        if constant.field != self.coeff_field:
            constant = self.coeff_field.coerce(constant)
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "constant", constant)

    def coefficient(self, alpha: FieldElement) -> CoeffElement:
        """c_α, zero when α is in the box but not stored."""
        if alpha.is_zero():
            return self.constant
        if alpha in self.coeffs:
            return self.coeffs[alpha]
        if not alpha.is_totally_positive() or not self.bound.contains(alpha):
            raise OutOfBoxError(alpha, self.bound)
        return self.coeff_field.zero()

    def indices(self) -> List[FieldElement]:
        return enumerate_box(self.field, self.bound)

    def is_zero(self) -> bool:
        return self.constant.is_zero() and not self.coeffs

    def with_metadata(
        self,
        weight: Optional[WeightPair] = None,
        character: Optional[RayCharacter] = None,
        clear_character: bool = False,
    ) -> "TruncatedSeries":
        return replace(
            self,
            weight=weight or self.weight,
            character=None if clear_character else (character or self.character),
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return subtract(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return negate(self)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __str__(self) -> str:
        return f"TruncatedSeries(weight={self.weight}, bound={self.bound}, terms={len(self.coeffs)})"


# ==================== Construction ====================


def zero_series(
    field: BaseField,
    coeff_field: CoeffField,
    weight: WeightPair,
    bound: TruncationBound,
    character: Optional[RayCharacter] = None,
) -> TruncatedSeries:
    return TruncatedSeries(field, coeff_field, weight, character, bound, coeff_field.zero(), {})


def constant_series(
    value: Scalar,
    field: BaseField,
    coeff_field: CoeffField,
    bound: TruncationBound,
    weight: Optional[WeightPair] = None,
    character: Optional[RayCharacter] = None,
) -> TruncatedSeries:
    return TruncatedSeries(
        field, coeff_field, weight or WeightPair(0, 0), character, bound, _as_coeff(coeff_field, value), {}
    )


def monomial(
    alpha: FieldElement,
    value: Scalar,
    field: BaseField,
    coeff_field: CoeffField,
    bound: TruncationBound,
    weight: Optional[WeightPair] = None,
    character: Optional[RayCharacter] = None,
) -> TruncatedSeries:
    """value·q^α."""
    return TruncatedSeries(
        field,
        coeff_field,
        weight or WeightPair(0, 0),
        character,
        bound,
        coeff_field.zero(),
        {alpha: _as_coeff(coeff_field, value)},
    )


def _as_coeff(coeff_field: CoeffField, value: Scalar) -> CoeffElement:
    if isinstance(value, CoeffElement):
        return value if value.field == coeff_field else coeff_field.coerce(value)
    return coeff_field.scalar(value)


# ==================== Vector space structure ====================


def _check_shape(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.field != b.field:
        raise MetadataMismatchError("field", a.field, b.field)
    if a.coeff_field != b.coeff_field:
        raise MetadataMismatchError("coeff_field", a.coeff_field, b.coeff_field)
    if a.bound != b.bound:
        raise MetadataMismatchError("bound", a.bound, b.bound)


def _check_metadata(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.weight != b.weight:
        raise MetadataMismatchError("weight", a.weight, b.weight)
    if not characters_agree(a.character, b.character):
        raise MetadataMismatchError("character", a.character, b.character)


def add(a: TruncatedSeries, b: TruncatedSeries, force_metadata: bool = False) -> TruncatedSeries:
    """Coefficientwise sum; metadata must agree unless force_metadata keeps a's."""
    _check_shape(a, b)
    if not force_metadata:
        _check_metadata(a, b)
    coeffs = dict(a.coeffs)
    for alpha, value in b.coeffs.items():
        coeffs[alpha] = coeffs[alpha] + value if alpha in coeffs else value
    return replace(a, constant=a.constant + b.constant, coeffs=coeffs)


def scalar_mul(c: Scalar, a: TruncatedSeries) -> TruncatedSeries:
    c = _as_coeff(a.coeff_field, c)
    if c.is_zero():
        return replace(a, constant=a.coeff_field.zero(), coeffs={})
    return replace(a, constant=c * a.constant, coeffs={alpha: c * v for alpha, v in a.coeffs.items()})


def negate(a: TruncatedSeries) -> TruncatedSeries:
    return replace(a, constant=-a.constant, coeffs={alpha: -v for alpha, v in a.coeffs.items()})


def subtract(a: TruncatedSeries, b: TruncatedSeries, force_metadata: bool = False) -> TruncatedSeries:
    return add(a, negate(b), force_metadata)


def linear_combination(
    coefficients: Sequence[Scalar], series: Sequence[TruncatedSeries], force_metadata: bool = False
) -> TruncatedSeries:
    if not series:
        raise InvalidInputError("series", "an empty combination has no metadata")
    total = scalar_mul(coefficients[0], series[0])
    for c, s in zip(coefficients[1:], series[1:]):
        total = add(total, scalar_mul(c, s), force_metadata)
    return total


def map_coefficients(s: TruncatedSeries, fn: Callable[[CoeffElement], CoeffElement]) -> TruncatedSeries:
    return replace(s, constant=fn(s.constant), coeffs={alpha: fn(v) for alpha, v in s.coeffs.items()})


def truncate(s: TruncatedSeries, bound: TruncationBound) -> TruncatedSeries:
    """Restrict to a smaller box, keeping the constant term."""
    if not bound.fits_in(s.bound):
        raise BoundTooLargeError(bound, s.bound)
    if bound == s.bound:
        return s
    coeffs = {alpha: v for alpha, v in s.coeffs.items() if bound.contains(alpha)}
    return replace(s, bound=bound, coeffs=coeffs)


def change_coeff_field(s: TruncatedSeries, coeff_field: CoeffField) -> TruncatedSeries:
    """Same series over a larger coefficient field."""
    if s.coeff_field == coeff_field:
        return s
    return TruncatedSeries(
        s.field,
        coeff_field,
        s.weight,
        s.character,
        s.bound,
        coeff_field.coerce(s.constant),
        {alpha: coeff_field.coerce(v) for alpha, v in s.coeffs.items()},
    )


# ==================== Ring structure ====================


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Product on the common box: c_γ = Σ c_β(a)c_δ(b) over β + δ = γ with β, δ
    totally positive or zero. Weights add and characters multiply.
    """
    _check_shape(a, b)
    bound = a.bound
    coeffs: Dict[FieldElement, CoeffElement] = {}

    def accumulate(gamma: FieldElement, value: CoeffElement) -> None:
        coeffs[gamma] = coeffs[gamma] + value if gamma in coeffs else value

    if a.constant:
        for delta, v in b.coeffs.items():
            accumulate(delta, a.constant * v)
    if b.constant:
        for beta, v in a.coeffs.items():
            accumulate(beta, v * b.constant)
    for beta, u in a.coeffs.items():
        for delta, v in b.coeffs.items():
            gamma = beta + delta
            if bound.contains(gamma):
                accumulate(gamma, u * v)
    return TruncatedSeries(
        a.field,
        a.coeff_field,
        a.weight + b.weight,
        multiply_optional(a.character, b.character),
        bound,
        a.constant * b.constant,
        coeffs,
    )


def power(s: TruncatedSeries, n: int) -> TruncatedSeries:
    """s^n for n >= 1 by repeated squaring."""
    if n < 1:
        raise InvalidInputError("exponent", f"series powers need n >= 1, got {n}")
    result: Optional[TruncatedSeries] = None
    base = s
    while n:
        if n & 1:
            result = base if result is None else mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def divide(g: TruncatedSeries, e: TruncatedSeries) -> TruncatedSeries:
    """
    The unique f with f·e = g on the box, by induction on the trace:
    c_γ(f) = (c_γ(g) - c_0(f)c_γ(e) - Σ_{0<β<γ} c_β(f)c_{γ-β}(e)) / c_0(e).
    """
    _check_shape(g, e)
    if e.constant.is_zero():
        raise NonInvertibleConstantError()
    inverse = e.constant.inverse()
    constant = g.constant * inverse
    solved: Dict[FieldElement, CoeffElement] = {}
    for gamma in g.indices():
        total = g.coeffs.get(gamma, g.coeff_field.zero())
        if constant and gamma in e.coeffs:
            total = total - constant * e.coeffs[gamma]
        for beta, fb in solved.items():
            rest = e.coeffs.get(gamma - beta)
            if rest is not None:
                total = total - fb * rest
        if total:
            solved[gamma] = total * inverse
    return TruncatedSeries(
        g.field,
        g.coeff_field,
        _weight_quotient(g.weight, e.weight),
        multiply_optional(g.character, inverse_optional(e.character)),
        g.bound,
        constant,
        solved,
    )


def _weight_quotient(a: WeightPair, b: WeightPair) -> WeightPair:
    if a.k1 < b.k1 or a.k2 < b.k2:
        raise MetadataMismatchError("weight", a, b)
    return a - b


# ==================== Unit action and ideal coefficients ====================


def _embedded_power(s: TruncatedSeries, e: FieldElement, exponent: int) -> CoeffElement:
    value = e ** exponent
    return s.coeff_field.embed_base(value)


def unit_translate(s: TruncatedSeries, eta: FieldElement) -> TruncatedSeries:
    """c'_{ηα} = η2^{(k2-k1)/2} c_α for every α with ηα still in the box."""
    field = s.field
    if not field.is_unit(eta) or not eta.is_totally_positive():
        raise NotAUnitError(eta, "not a totally positive unit")
    factor = _embedded_power(s, eta.conjugate(), -s.weight.half_difference())
    coeffs = {}
    for alpha, value in s.coeffs.items():
        moved = eta * alpha
        if s.bound.contains(moved):
            coeffs[moved] = factor * value
    return replace(s, coeffs=coeffs)


def unit_orbit(field: BaseField, alpha: FieldElement, reach: int = UNIT_SEARCH_RANGE) -> List[FieldElement]:
    """α, ηα, η^{-1}α, η^2 α, ... for the totally positive fundamental unit η."""
    eta = field.tp_fundamental_unit
    orbit = [alpha]
    for k in range(1, reach + 1):
        orbit.append(alpha * eta ** k)
        orbit.append(alpha * eta ** (-k))
    return orbit


def ideal_coefficient(s: TruncatedSeries, a: PrincipalIdeal) -> CoeffElement:
    """
    c(a) = c_α·α2^{(k1-k2)/2} for a totally positive generator α of a inside
    the box; unit translates of the canonical generator are tried in turn.
    """
    h = s.weight.half_difference()
    for alpha in unit_orbit(s.field, a.gen):
        if s.bound.contains(alpha):
            return s.coefficient(alpha) * _embedded_power(s, alpha.conjugate(), h)
    raise OutOfBoxError(a, s.bound)


def element_coefficient(s: TruncatedSeries, alpha: FieldElement, ideal_value: CoeffElement) -> CoeffElement:
    """Inverse of ideal_coefficient: c_α = c((α))·α2^{-(k1-k2)/2}."""
    return ideal_value * _embedded_power(s, alpha.conjugate(), -s.weight.half_difference())


# ==================== Coordinates ====================


def coefficient_vector(s: TruncatedSeries, indices: Optional[Iterable[FieldElement]] = None) -> List[CoeffElement]:
    """Constant term followed by c_α in box order (or the given indices)."""
    indices = s.indices() if indices is None else indices
    zero = s.coeff_field.zero()
    return [s.constant] + [s.coeffs.get(alpha, zero) for alpha in indices]


def from_vector(template: TruncatedSeries, vector: Sequence[CoeffElement]) -> TruncatedSeries:
    """Series with template's metadata and the given coordinates (coefficient_vector order)."""
    indices = template.indices()
    if len(vector) != len(indices) + 1:
        raise InvalidInputError("vector", f"expected {len(indices) + 1} coordinates, got {len(vector)}")
    coeffs = {alpha: v for alpha, v in zip(indices, vector[1:]) if v}
    return replace(template, constant=vector[0], coeffs=coeffs)
