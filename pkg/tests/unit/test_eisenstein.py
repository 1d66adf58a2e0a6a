"""
Unit tests for L(ψ, 0) and the weight [1,1] Eisenstein series E_{1,ψ}.

For ψ = μ∘N with μ a Dirichlet character mod 7, L(ψ, s) = L(μ, s)L(μχ5, s) with
χ5 the character of Q(√5), so L(ψ, 0) = B_{1,μ}·B_{1,μχ5} is an independent oracle.
"""

from fractions import Fraction
from math import gcd

import mpmath
import pytest
from sympy import legendre_symbol

from arithmetic.box import TruncationBound
from arithmetic.ideals import primes_up_to
from core.exceptions import NotTotallyOddError
from eisenstein.lvalues import bernoulli_value, compute_L0, dirichlet_coefficients, shintani_L0
from eisenstein.series import EISENSTEIN_WEIGHT, divisor_sum_coefficient, eisenstein_series, galois_conjugate_series
from fourier.series import ideal_coefficient
from ray_class.characters import character_inverse, character_power, characters_agree, trivial_character

LOG3_MOD7 = {1: 0, 3: 1, 2: 2, 6: 3, 4: 4, 5: 5}


def generalized_bernoulli(conductor: int, eta, field):
    """B_{1,η} = (1/f) Σ a·η(a) for an odd primitive η mod f."""
    total = field.zero()
    for a in range(1, conductor):
        if gcd(a, conductor) == 1:
            total = total + eta(a) * a
    return total / conductor


def l_value_oracle(field, k: int):
    """L(μ^k∘N, 0) for μ(3) = ζ6^-1, from generalised Bernoulli numbers."""

    def mu(a):
        return field.root_of_unity(6, -k * LOG3_MOD7[a % 7])

    def mu_chi5(a):
        return mu(a) * int(legendre_symbol(a % 5, 5))

    return generalized_bernoulli(7, mu, field) * generalized_bernoulli(35, mu_chi5, field)


class TestBernoulli:
    """Test Bernoulli polynomial values."""

    @pytest.mark.parametrize(
        "n,t,expected",
        [
            (1, Fraction(1, 2), Fraction(0)),
            (1, Fraction(1, 3), Fraction(-1, 6)),
            (1, Fraction(1), Fraction(1, 2)),
            (2, Fraction(0), Fraction(1, 6)),
            (2, Fraction(1, 2), Fraction(-1, 12)),
        ],
    )
    def test_values(self, n, t, expected):
        assert bernoulli_value(n, t) == expected


class TestLValues:
    """Test exact and numeric L(ψ, 0)."""

    def test_quadratic_character(self, chi_cubed):
        """Should give L(χ³, 0) = h(-7)·h(-35) = 2."""
        value = compute_L0(chi_cubed, check=False).value
        assert value.is_rational()
        assert value.rational() == 2

    @pytest.mark.parametrize("k", [1, 3, 5])
    def test_matches_dirichlet_factorisation(self, chi, q_sqrt_m3, k):
        """Should agree with B_{1,μ^k}·B_{1,μ^k χ5}."""
        psi = character_power(chi, k)
        exact = q_sqrt_m3.coerce(shintani_L0(psi))
        assert exact == l_value_oracle(q_sqrt_m3, k)

    def test_numeric_cross_check(self, chi_cubed):
        """Should agree with the functional-equation sum, with |W| = 1."""
        lvalue = compute_L0(chi_cubed)
        assert lvalue.agreement is not None and lvalue.agreement < 1e-8
        assert abs(abs(lvalue.root_number) - 1) < 1e-8
        assert abs(lvalue.numeric - 2) < 1e-8

    def test_numeric_cross_check_sextic(self, chi):
        """Should also pass the cross-check for the order 6 character."""
        lvalue = compute_L0(chi)
        assert mpmath.almosteq(mpmath.mpc(lvalue.numeric), lvalue.value.to_complex(), 1e-8)

    def test_dirichlet_coefficients(self, chi):
        """Should give a_1 = 1 and a_2 = a_3 = 0 (no ideals of norm 2 or 3)."""
        coefficients = dirichlet_coefficients(chi, 5)
        assert coefficients[1] == 1
        assert coefficients[2] == 0
        assert coefficients[3] == 0

    def test_even_character_rejected(self, chi, group7):
        """Should refuse characters that are not totally odd."""
        with pytest.raises(NotTotallyOddError):
            compute_L0(character_power(chi, 2))
        with pytest.raises(NotTotallyOddError):
            compute_L0(trivial_character(group7))


class TestEisensteinSeries:
    """Test E_{1,ψ}."""

    @pytest.fixture(scope="class")
    def e_chi(self, chi):
        return eisenstein_series(chi, TruncationBound.rational(4, 4, 5), lvalue=compute_L0(chi, check=False))

    def test_metadata(self, e_chi, chi, q_sqrt_m3):
        """Should have weight [1,1], character χ and coefficients in Q(√-3)."""
        assert e_chi.weight == EISENSTEIN_WEIGHT
        assert e_chi.character == chi
        assert e_chi.coeff_field == q_sqrt_m3

    def test_constant_term(self, e_chi, chi):
        """Should have constant term L(χ, 0)/4."""
        assert e_chi.constant == compute_L0(chi, check=False).value / 4

    def test_first_coefficients(self, q5, e_chi, chi, prime2):
        """Should give c_1 = 1 and c_2 = 1 + χ((2))."""
        assert e_chi.coefficient(q5.one()) == e_chi.coeff_field.one()
        assert e_chi.coefficient(q5.element(2)) == e_chi.coeff_field.one() + chi.evaluate(prime2)

    def test_units_share_coefficients(self, q5, e_chi):
        """Should give c_u = c_1 for the totally positive unit u."""
        assert e_chi.coefficient(q5.tp_fundamental_unit) == e_chi.coefficient(q5.one())

    def test_divisor_sums_skip_the_conductor(self, chi, level7):
        """Should only count the divisor (1) of (7)."""
        assert divisor_sum_coefficient(chi, level7) == chi.value_field.one()

    def test_ideal_coefficients_at_primes(self, e_chi, chi):
        """Should give c(p) = 1 + χ(p) at every prime in the box."""
        for p in primes_up_to(5, 5):
            value = ideal_coefficient(e_chi, p)
            assert value == e_chi.coeff_field.one() + chi.evaluate_or_zero(p), str(p)

    def test_quadratic_series_over_larger_field(self, chi_cubed, q_sqrt_m3):
        """Should coerce the rational series of χ³ into Q(√-3)."""
        bound = TruncationBound.rational(3, 3, 5)
        s = eisenstein_series(chi_cubed, bound, q_sqrt_m3, compute_L0(chi_cubed, check=False))
        assert s.coeff_field == q_sqrt_m3
        assert s.constant == q_sqrt_m3.scalar(Fraction(1, 2))

    def test_even_character_rejected(self, chi):
        with pytest.raises(NotTotallyOddError):
            eisenstein_series(character_power(chi, 2), TruncationBound.rational(3, 3, 5))

    def test_galois_conjugate_is_the_inverse_series(self, chi, e_chi):
        """Should map E_{1,χ} to E_{1,χ^-1} under √-3 ↦ -√-3."""
        conjugate = galois_conjugate_series(e_chi, 1)
        inverse = character_inverse(chi)
        expected = eisenstein_series(inverse, e_chi.bound, lvalue=compute_L0(inverse, check=False))
        assert characters_agree(conjugate.character, inverse)
        assert conjugate.coeffs == expected.coeffs
        assert conjugate.constant == expected.constant
