"""
Exact arithmetic in a real quadratic field F = Q(sqrt(d)) of narrow class number one.

Elements are x + y*sqrt(d) with Fraction coordinates. Embedding 1 sends sqrt(d)
to the positive root; embedding 2 is the Galois conjugate. All sign questions are
answered by exact rational comparisons.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from sympy import factorint
from sympy.solvers.diophantine.diophantine import diop_DN

from config.fields import declared_narrow_class_number_one, get_field_data
from core.exceptions import NarrowClassNumberError, NotAUnitError, ZeroElementError
from core.logging_config import get_logger

logger = get_logger(__name__)

Rational = Union[int, Fraction]


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def quadratic_sign(x: Fraction, y: Fraction, d: int) -> int:
    """Sign of the real number x + y*sqrt(d), sqrt(d) > 0, without floating point."""
    sx, sy = _sign(x), _sign(y)
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy if sx == 0 else sx
    # opposite signs: the larger square wins
    gap = x * x - d * y * y
    return sx if gap > 0 else sy


@dataclass(frozen=True)
class FieldElement:
    """The element x + y*sqrt(d) of Q(sqrt(d))."""

    x: Fraction
    y: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    # ---- constructors ----

    @classmethod
    def rational(cls, value: Rational, d: int) -> "FieldElement":
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def from_half(cls, a: int, b: int, d: int) -> "FieldElement":
        """The element (a + b*sqrt(d))/2, the coordinate convention of the fixture files."""
        return cls(Fraction(a, 2), Fraction(b, 2), d)

    # ---- arithmetic ----

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.d != self.d:
                raise ValueError(f"elements of Q(sqrt({self.d})) and Q(sqrt({other.d})) do not mix")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.rational(other, self.d)
        return NotImplemented

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.x + other.x, self.y + other.y, self.d)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.x, -self.y, self.d)

    def __sub__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.x - other.x, self.y - other.y, self.d)

    def __rsub__(self, other) -> "FieldElement":
        return (-self) + other

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(
            self.x * other.x + self.d * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        n = self.norm()
        if n == 0:
            raise ZeroElementError("inverse")
        return FieldElement(self.x / n, -self.y / n, self.d)

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = FieldElement.rational(1, self.d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---- invariants ----

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.x, -self.y, self.d)

    def norm(self) -> Fraction:
        return self.x * self.x - self.d * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_rational(self) -> bool:
        return self.y == 0

    def real_sign(self) -> int:
        """Sign of the element as a real number under embedding 1."""
        return quadratic_sign(self.x, self.y, self.d)

    def is_totally_positive(self) -> bool:
        return self.real_sign() > 0 and self.conjugate().real_sign() > 0

    def is_integral(self) -> bool:
        """Membership in the ring of integers O_F."""
        if self.d % 4 == 1:
            a, b = 2 * self.x, 2 * self.y
            return (
                a.denominator == 1
                and b.denominator == 1
                and (a.numerator - b.numerator) % 2 == 0
            )
        return self.x.denominator == 1 and self.y.denominator == 1

    def half_coords(self) -> Tuple[int, int]:
        """Integers (a, b) with self = (a + b*sqrt(d))/2; requires 2x, 2y integral."""
        a, b = 2 * self.x, 2 * self.y
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError(f"{self} has no half-integer coordinates")
        return a.numerator, b.numerator

    def integral_coords(self) -> Tuple[int, int]:
        """Coordinates (a, b) on the integral basis (1, omega)."""
        if self.d % 4 == 1:
            b = 2 * self.y
            a = self.x - self.y
        else:
            a, b = self.x, self.y
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError(f"{self} is not integral")
        return a.numerator, b.numerator

    def approx(self) -> float:
        return float(self.x) + float(self.y) * self.d ** 0.5

    def floor(self) -> int:
        """Exact floor of the embedding-1 value."""
        n = int(self.approx() // 1)
        while (self - n).real_sign() < 0:
            n -= 1
        while (self - (n + 1)).real_sign() >= 0:
            n += 1
        return n

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.x, self.y)

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        a, b = 2 * self.x, 2 * self.y
        if a.denominator == 1 and b.denominator == 1 and (self.x.denominator == 2 or self.y.denominator == 2):
            return f"({_linear(a, b, self.d)})/2"
        return _linear(self.x, self.y, self.d)

    __repr__ = __str__


def _linear(x: Fraction, y: Fraction, d: int) -> str:
    root = f"√{d}"
    if y == 1:
        tail = root
    elif y == -1:
        tail = f"-{root}"
    else:
        tail = f"{y}{root}"
    if x == 0:
        return tail
    sign = "" if tail.startswith("-") else "+"
    return f"{x}{sign}{tail}"


@dataclass(frozen=True)
class BaseField:
    """
    The base field F = Q(sqrt(d)) with its unit data.

    Narrow class number one is declared, not proven: construction checks that the
    fundamental unit has norm -1 (otherwise the narrow class group is twice the
    class group) and that the supplied generators have the claimed norms and signs.
    """

    d: int
    fundamental_unit: FieldElement
    tp_fundamental_unit: FieldElement
    different_gen: FieldElement

    @property
    def discriminant(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    @property
    def omega(self) -> FieldElement:
        if self.d % 4 == 1:
            return FieldElement(Fraction(1, 2), Fraction(1, 2), self.d)
        return FieldElement(Fraction(0), Fraction(1), self.d)

    def element(self, x: Rational, y: Rational = 0) -> FieldElement:
        return FieldElement(Fraction(x), Fraction(y), self.d)

    def from_half(self, a: int, b: int) -> FieldElement:
        return FieldElement.from_half(a, b, self.d)

    def from_integral(self, a: int, b: int) -> FieldElement:
        """The element a + b*omega."""
        return self.element(a) + self.omega * b

    def one(self) -> FieldElement:
        return self.element(1)

    def embed(self, e: FieldElement, i: int) -> FieldElement:
        """The i-th real embedding of e, as an element read under embedding 1."""
        if i == 1:
            return e
        if i == 2:
            return e.conjugate()
        raise ValueError(f"embedding index must be 1 or 2, got {i}")

    def is_totally_positive(self, e: FieldElement) -> bool:
        return e.is_totally_positive()

    def is_unit(self, e: FieldElement) -> bool:
        return e.is_integral() and abs(e.norm()) == 1

    def canonical_tp_generator(self, e: FieldElement) -> FieldElement:
        """
        The totally positive associate mu of e with 1 <= mu_1/mu_2 < u_1/u_2,
        u the totally positive fundamental unit with u_1 > 1.
        """
        if e.is_zero():
            raise ZeroElementError("canonical_tp_generator")
        mu = e
        if mu.real_sign() != mu.conjugate().real_sign():
            mu = mu * self.fundamental_unit
        if mu.real_sign() < 0:
            mu = -mu
        u = self.tp_fundamental_unit
        u_inv = u.conjugate()
        while mu.y < 0:
            mu = mu * u
        while (mu * u_inv).y >= 0:
            mu = mu * u_inv
        return mu

    def __str__(self) -> str:
        return f"Q(√{self.d})"


def _smallest_unit(d: int) -> FieldElement:
    """Fundamental unit > 1 from the Pell-type equations x^2 - d y^2 = +-4 or +-1."""
    half = d % 4 == 1
    targets = (-4, 4) if half else (-1, 1)
    best: Optional[FieldElement] = None
    for target in targets:
        for x, y in diop_DN(d, target):
            x, y = abs(int(x)), abs(int(y))
            if y == 0:
                continue
            candidate = FieldElement.from_half(x, y, d) if half else FieldElement(x, y, d)
            if not candidate.is_integral():
                continue
            if best is None or (candidate - best).real_sign() < 0:
                best = candidate
    if best is None:
        raise NarrowClassNumberError(d, "no fundamental unit found")
    return best


def _tabulated_unit(d: int) -> Optional[FieldElement]:
    data = get_field_data(d)
    if data is None:
        return None
    a, b = (int(token) for token in data["fundamental_unit"].split())
    return FieldElement.from_half(a, b, d)


def _check_squarefree(d: int) -> None:
    if d < 2 or any(exponent > 1 for exponent in factorint(d).values()):
        raise NarrowClassNumberError(d, "radicand must be a squarefree integer > 1")


def make_base_field(
    d: int,
    fundamental_unit: Optional[FieldElement] = None,
    different_gen: Optional[FieldElement] = None,
) -> BaseField:
    """
    Build Q(sqrt(d)), computing or validating the unit and different data.

    Args:
        d: Squarefree radicand
        fundamental_unit: Optional user-supplied fundamental unit (validated)
        different_gen: Optional user-supplied generator of the different (validated)

    Returns:
        The validated BaseField
    """
    _check_squarefree(d)
    if not declared_narrow_class_number_one(d):
        logger.warning("Narrow class number one not declared for field", d=d)

    unit = fundamental_unit if fundamental_unit is not None else _tabulated_unit(d) or _smallest_unit(d)
    if unit.d != d or not unit.is_integral() or abs(unit.norm()) != 1:
        raise NotAUnitError(unit)
    if unit.real_sign() < 0:
        unit = -unit
    if (unit - 1).real_sign() < 0:
        unit = unit.inverse()
    if unit.norm() != -1:
        raise NarrowClassNumberError(d, "fundamental unit has norm +1, so no unit of mixed signs exists")

    tp_unit = unit * unit
    field = BaseField(d=d, fundamental_unit=unit, tp_fundamental_unit=tp_unit, different_gen=tp_unit)

    root = FieldElement(0, 1, d) if d % 4 == 1 else FieldElement(0, 2, d)
    delta = field.canonical_tp_generator(different_gen if different_gen is not None else root)
    if not delta.is_totally_positive() or abs(delta.norm()) != field.discriminant:
        raise NarrowClassNumberError(d, f"different generator {delta} has norm {delta.norm()}")

    field = BaseField(d=d, fundamental_unit=unit, tp_fundamental_unit=tp_unit, different_gen=delta)
    logger.debug("Base field built", d=d, unit=unit, different=delta)
    return field


@lru_cache(maxsize=None)
def get_base_field(d: int) -> BaseField:
    """Cached base field for radicand d."""
    return make_base_field(d)


def is_totally_positive(e: FieldElement) -> bool:
    """True iff both real embeddings of e are positive."""
    return e.is_totally_positive()


def canonical_tp_generator(e: FieldElement) -> FieldElement:
    """Canonical totally positive associate of e in its own field."""
    return get_base_field(e.d).canonical_tp_generator(e)
