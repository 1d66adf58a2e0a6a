"""
Unit tests for principal ideals, prime decomposition and truncation boxes.
"""

from fractions import Fraction

import pytest

from arithmetic.box import TruncationBound, bn, enumerate_box, parse_bound
from arithmetic.ideals import (
    PrincipalIdeal,
    coprime,
    factor_ideal,
    ideal_divisors,
    ideal_gcd,
    ideals_of_norm,
    is_prime_ideal,
    primes_above,
    primes_up_to,
    rational_prime_below,
    split_type,
)
from core.exceptions import InvalidInputError, ZeroElementError


class TestPrimeDecomposition:
    """Test how rational primes decompose in Q(√5)."""

    @pytest.mark.parametrize(
        "p,kind",
        [(2, "inert"), (3, "inert"), (5, "ramified"), (7, "inert"), (11, "split"), (19, "split")],
    )
    def test_split_type(self, p, kind):
        """Should classify by the Kronecker symbol of the discriminant."""
        assert split_type(p, 5) == kind

    def test_inert_two(self):
        """Should give the single prime (2) of norm 4."""
        (p,) = primes_above(2, 5)
        assert str(p) == "(2)"
        assert p.norm == 4

    def test_ramified_five(self):
        """Should give (√5) with canonical generator (5+√5)/2."""
        (p,) = primes_above(5, 5)
        assert str(p) == "((5+√5)/2)"
        assert p.norm == 5

    def test_split_eleven_is_sorted(self):
        """Should list both primes over 11, sorted by generator."""
        primes = primes_above(11, 5)
        assert [p.half_coords() for p in primes] == [(7, 1), (8, 2)]
        assert all(p.norm == 11 for p in primes)

    def test_composite_rejected(self):
        """Should reject a composite rational 'prime'."""
        with pytest.raises(InvalidInputError):
            primes_above(9, 5)

    def test_primes_up_to(self):
        """Should enumerate prime ideals by norm."""
        norms = [p.norm for p in primes_up_to(11, 5)]
        assert norms == [4, 5, 9, 11, 11]


class TestPrincipalIdeal:
    """Test ideal arithmetic on canonical generators."""

    def test_generators_are_canonical(self):
        """Should identify associates."""
        assert PrincipalIdeal.from_half(8, -2, 5) == PrincipalIdeal.from_half(7, 1, 5)

    def test_zero_ideal_rejected(self):
        """Should refuse to generate the zero ideal."""
        with pytest.raises(ZeroElementError):
            PrincipalIdeal.from_half(0, 0, 5)

    def test_non_integral_generator_rejected(self):
        """Should refuse a non-integral generator."""
        with pytest.raises(InvalidInputError):
            PrincipalIdeal.from_half(1, 0, 5)

    def test_factor_fourteen(self, level14, level7, prime2):
        """Should factor (14) as (2)(7)."""
        assert factor_ideal(level14) == {prime2: 1, level7: 1}

    def test_divisors_sorted_by_norm(self):
        """Should list the divisors of (6) by norm."""
        six = PrincipalIdeal.from_half(12, 0, 5)
        assert [q.norm for q in ideal_divisors(six)] == [1, 4, 9, 36]

    def test_quotient_and_divides(self, level14, level7, prime2):
        """Should divide exactly."""
        assert prime2.divides(level14)
        assert not level7.divides(prime2)
        assert level14.quotient(prime2) == level7
        with pytest.raises(InvalidInputError):
            prime2.quotient(level7)

    def test_gcd_and_coprime(self, level14, level7, prime2):
        """Should compute gcd through factorisations."""
        assert ideal_gcd(level14, level7) == level7
        assert coprime(prime2, level7)
        assert not coprime(prime2, level14)

    def test_prime_detection(self, prime2, prime5, level14):
        """Should recognise prime ideals and the rational prime below them."""
        assert is_prime_ideal(prime2)
        assert is_prime_ideal(prime5)
        assert not is_prime_ideal(level14)
        assert rational_prime_below(prime5) == 5

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 0), (4, 1), (11, 2), (55, 2), (121, 3)])
    def test_ideals_of_norm(self, n, count):
        """Should count ideals of a given norm."""
        assert len(ideals_of_norm(n, 5)) == count

    def test_power(self, prime2):
        """Should raise to powers and refuse negative exponents."""
        assert (prime2 ** 2).norm == 16
        with pytest.raises(InvalidInputError):
            prime2 ** -1


class TestTruncationBound:
    """Test boxes and their enumeration."""

    def test_enumerate_small_box(self, q5, box):
        """Should find exactly 1, (3-√5)/2, (3+√5)/2 and 2 in the open box (3, 3)."""
        found = enumerate_box(q5, box(3))
        assert [str(a) for a in found] == ["1", "(3-√5)/2", "(3+√5)/2", "2"]

    def test_box_is_open(self, q5, box):
        """Should exclude elements on the boundary."""
        assert not box(3).contains(q5.element(3))
        assert box(3).contains(q5.element(2))

    def test_meet_join_and_fit(self, box):
        """Should take componentwise min and max."""
        small, wide = box(3, 8), box(6, 4)
        assert small.meet(wide) == box(3, 4)
        assert small.join(wide) == box(6, 8)
        assert small.meet(wide).fits_in(small)
        assert not wide.fits_in(small)

    def test_bn_family(self, q5):
        """Should give ((5n - n√5)/2, (5n + n√5)/2)."""
        b = bn(2)
        assert b.b1 == q5.from_half(10, -2)
        assert b.b2 == q5.from_half(10, 2)

    @pytest.mark.parametrize(
        "text,b1,b2",
        [("10,10", 10, 10), ("7/2, 4", Fraction(7, 2), 4)],
    )
    def test_parse_rational_bound(self, text, b1, b2):
        """Should parse 'b1,b2'."""
        assert parse_bound(text, 5) == TruncationBound.rational(b1, b2, 5)

    def test_parse_bn_shorthand(self):
        """Should parse 'bn:N'."""
        assert parse_bound("bn:3", 5) == bn(3)

    @pytest.mark.parametrize("text", ["x", "1,2,3", "bn:x", "0,1", "bn:0"])
    def test_parse_rejects(self, text):
        """Should reject malformed or non-positive bounds."""
        with pytest.raises(InvalidInputError):
            parse_bound(text, 5)

    def test_bn_needs_root_five(self):
        """Should only define b(n) over Q(√5)."""
        with pytest.raises(InvalidInputError):
            bn(1, d=13)
