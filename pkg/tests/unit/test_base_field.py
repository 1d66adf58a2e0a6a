"""
Unit tests for exact arithmetic in the real quadratic base field.
"""

from fractions import Fraction

import pytest

from arithmetic.base_field import FieldElement, get_base_field, make_base_field
from core.exceptions import NarrowClassNumberError, ZeroElementError


class TestFieldElement:
    """Test arithmetic and printing of x + y√d."""

    # --- Arithmetic ---

    def test_golden_ratio_squares_to_itself_plus_one(self, q5):
        """Should satisfy ε² = ε + 1 for ε = (1+√5)/2."""
        eps = q5.from_half(1, 1)
        assert eps * eps == eps + 1

    def test_inverse(self, q5):
        """Should invert exactly."""
        alpha = q5.from_half(7, 1)
        assert alpha * alpha.inverse() == q5.one()

    def test_norm_and_trace(self, q5):
        """Should compute norm and trace as rationals."""
        alpha = q5.from_half(7, 1)
        assert alpha.norm() == 11
        assert alpha.trace() == 7

    def test_inverse_of_zero_raises(self, q5):
        """Should refuse to invert zero."""
        with pytest.raises(ZeroElementError):
            q5.element(0).inverse()

    def test_integral_coordinates(self, q5):
        """Should read (5+√5)/2 as 2 + 1·ω."""
        assert q5.from_half(5, 1).integral_coords() == (2, 1)
        assert q5.from_half(5, 1).half_coords() == (5, 1)

    def test_half_integers_without_omega_are_not_integral(self, q5):
        """Should reject 1/2 as non-integral."""
        assert not q5.element(Fraction(1, 2)).is_integral()
        assert q5.from_half(3, 1).is_integral()

    def test_floor_of_root_five(self, q5):
        """Should floor √5 to 2."""
        assert q5.element(0, 1).floor() == 2

    # --- Signs ---

    @pytest.mark.parametrize(
        "a,b,expected",
        [
            (5, 1, True),
            (3, -1, True),
            (0, 2, False),
            (1, 1, False),
            (-3, 1, False),
        ],
    )
    def test_total_positivity(self, q5, a, b, expected):
        """Should be totally positive exactly when both embeddings are positive."""
        assert q5.from_half(a, b).is_totally_positive() is expected

    # --- Printing ---

    @pytest.mark.parametrize(
        "a,b,expected",
        [
            (5, 1, "(5+√5)/2"),
            (3, -1, "(3-√5)/2"),
            (4, 0, "2"),
            (0, 2, "√5"),
            (8, 2, "4+√5"),
        ],
    )
    def test_str(self, q5, a, b, expected):
        """Should print in half-integral form only when needed."""
        assert str(q5.from_half(a, b)) == expected


class TestBaseField:
    """Test unit data and canonical generators."""

    def test_unit_data_for_root_five(self, q5):
        """Should carry ε = (1+√5)/2, u = ε² and the different generator (5+√5)/2."""
        assert q5.fundamental_unit == q5.from_half(1, 1)
        assert q5.tp_fundamental_unit == q5.from_half(3, 1)
        assert q5.different_gen == q5.from_half(5, 1)
        assert q5.discriminant == 5
        assert str(q5) == "Q(√5)"

    def test_base_field_is_cached(self):
        """Should return the same object for repeated lookups."""
        assert get_base_field(5) is get_base_field(5)

    def test_embedding_two_is_conjugation(self, q5):
        """Should read the second embedding as the conjugate."""
        alpha = q5.from_half(5, 1)
        assert q5.embed(alpha, 2) == alpha.conjugate()

    def test_unit_of_norm_plus_one_rejected(self):
        """Should reject Q(√3), whose fundamental unit has norm +1."""
        with pytest.raises(NarrowClassNumberError):
            make_base_field(3)

    def test_non_squarefree_rejected(self):
        """Should reject non-squarefree d."""
        with pytest.raises(NarrowClassNumberError):
            make_base_field(8)

    # --- Canonical generators ---

    @pytest.mark.parametrize(
        "a,b,expected",
        [
            (8, -2, (7, 1)),    # 4-√5 -> (7+√5)/2
            (8, 2, (8, 2)),     # 4+√5 already canonical
            (0, 2, (5, 1)),     # √5 -> (5+√5)/2
            (-4, 0, (4, 0)),    # -2 -> 2
            (6, 2, (4, 0)),     # 2u -> 2
        ],
    )
    def test_canonical_generator(self, q5, a, b, expected):
        """Should pick the unique totally positive associate in the fundamental ratio range."""
        mu = q5.canonical_tp_generator(q5.from_half(a, b))
        assert mu.half_coords() == expected

    def test_canonical_generator_is_unit_invariant(self, q5):
        """Should give the same generator for every associate."""
        alpha = q5.from_half(9, 1)
        for unit in (q5.fundamental_unit, -q5.fundamental_unit, q5.tp_fundamental_unit ** 3):
            assert q5.canonical_tp_generator(alpha * unit) == q5.canonical_tp_generator(alpha)

    def test_canonical_generator_of_zero_raises(self, q5):
        """Should refuse the zero element."""
        with pytest.raises(ZeroElementError):
            q5.canonical_tp_generator(FieldElement.rational(0, 5))
