"""
Shared pytest fixtures for the partial weight one toolkit tests.
"""

import random
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

import pytest

from arithmetic.base_field import get_base_field
from arithmetic.box import TruncationBound, enumerate_box
from arithmetic.coeff_field import CoeffField
from arithmetic.ideals import PrincipalIdeal, primes_up_to
from data_io.fixtures import load_character, load_newforms
from data_io.records import NewformRecord, SpaceFixture
from eisenstein.lvalues import compute_L0
from eisenstein.series import eisenstein_series
from fourier.series import TruncatedSeries, WeightPair, mul
from ray_class.characters import RayCharacter, character_inverse, character_power
from ray_class.group import Modulus, build_ray_class_group

FIXTURES = Path(__file__).parent / "fixtures"


# --- Base field and levels ---


@pytest.fixture(scope="session")
def q5():
    """Q(√5), the base field of every example."""
    return get_base_field(5)


@pytest.fixture(scope="session")
def level7():
    return PrincipalIdeal.from_half(14, 0, 5)


@pytest.fixture(scope="session")
def level14():
    return PrincipalIdeal.from_half(28, 0, 5)


@pytest.fixture(scope="session")
def prime2():
    """(2), inert of norm 4: the default Hecke prime."""
    return PrincipalIdeal.from_half(4, 0, 5)


@pytest.fixture(scope="session")
def prime5():
    """((5+√5)/2) = (√5), the ramified prime of norm 5."""
    return PrincipalIdeal.from_half(5, 1, 5)


@pytest.fixture
def box():
    """Rational box (b1, b2) over Q(√5)."""

    def make(b1, b2=None) -> TruncationBound:
        return TruncationBound.rational(Fraction(b1), Fraction(b1 if b2 is None else b2), 5)

    return make


# --- Ray class groups and characters ---


@pytest.fixture(scope="session")
def group7(level7):
    return build_ray_class_group(Modulus(level7, (True, True)))


@pytest.fixture(scope="session")
def group14(level14):
    return build_ray_class_group(Modulus(level14, (True, True)))


@pytest.fixture(scope="session")
def chi():
    """The order 6 totally odd character of (7)∞1∞2, read from its fixture."""
    return load_character(FIXTURES / "chi_mod7.txt")


@pytest.fixture(scope="session")
def chi_cubed(chi):
    return character_power(chi, 3)


# --- Coefficient fields ---


@pytest.fixture(scope="session")
def qq():
    return CoeffField(())


@pytest.fixture(scope="session")
def q_sqrt_m3():
    """Q(√-3), the value field of χ."""
    return CoeffField((-3,))


@pytest.fixture(scope="session")
def table1_field():
    return CoeffField((5, -3, -19))


# --- Newform records ---


@pytest.fixture(scope="session")
def table1_record():
    """The weight [5,1] newform of level (14) with coefficients in Q(√5, √-3, √-19)."""
    return load_newforms(FIXTURES / "table1_newform.txt")[0]


def build_eisenstein_record(psi: RayCharacter, norm_bound: int = 60) -> NewformRecord:
    """Weight [1,1] record with c(p) = 1 + ψ(p), the Hecke data of E_{1,ψ}."""
    d = psi.modulus.d
    field = psi.value_field
    eigenvalues = {PrincipalIdeal.unit(d): field.one()}
    for p in primes_up_to(norm_bound, d):
        eigenvalues[p] = field.one() + psi.evaluate_or_zero(p)
    return NewformRecord(
        d=d,
        level=psi.modulus.finite_part,
        weight=WeightPair(1, 1),
        character=psi,
        coeff_field=field,
        eigenvalues=eigenvalues,
        provenance="synthetic Eisenstein eigenvalues",
        label="eisenstein",
    )


@pytest.fixture
def eisenstein_record():
    return build_eisenstein_record


# --- Random series ---


@pytest.fixture
def random_series(q5, qq):
    """Factory of reproducible series with small integer coefficients."""

    def make(
        seed: int,
        bound: Optional[TruncationBound] = None,
        coeff_field: Optional[CoeffField] = None,
        weight: WeightPair = WeightPair(2, 2),
        constant: Optional[int] = None,
        density: float = 0.7,
    ) -> TruncatedSeries:
        rng = random.Random(seed)
        bound = bound or TruncationBound.rational(5, 5, 5)
        coeff_field = coeff_field or qq

        def draw():
            return coeff_field.element([Fraction(rng.randint(-3, 3)) for _ in range(coeff_field.degree)])

        coeffs = {alpha: draw() for alpha in enumerate_box(q5, bound) if rng.random() < density}
        c0 = coeff_field.scalar(constant) if constant is not None else draw()
        return TruncatedSeries(q5, coeff_field, weight, None, bound, c0, coeffs)

    return make


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


SeriesFactory = Callable[..., TruncatedSeries]


# --- Spaces ---


@pytest.fixture(scope="session")
def eisenstein_product_space(chi, level7, q_sqrt_m3):
    """span(E_{1,χ^-1}·E_{1,χ}) in weight [2,2], level (7), on the box (8, 8)."""
    bound = TruncationBound.rational(8, 8, 5)
    inverse = character_inverse(chi)
    product = mul(
        eisenstein_series(inverse, bound, lvalue=compute_L0(inverse, check=False)),
        eisenstein_series(chi, bound, lvalue=compute_L0(chi, check=False)),
    )
    return SpaceFixture(
        d=5,
        level=level7,
        weight=WeightPair(2, 2),
        coeff_field=q_sqrt_m3,
        provenance="product of weight one Eisenstein series",
        basis=(product,),
        dimension=1,
        bound=bound,
    )
