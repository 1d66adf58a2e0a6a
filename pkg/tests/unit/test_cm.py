"""
Unit tests for the quadratic twist CM test and the CM upper bound.
"""

import pytest

from cm.twists import CM_COMPATIBLE, NOT_CM, cm_functionals, cm_test, cm_twist_candidates, cm_upper_bound
from eisenstein.lvalues import compute_L0
from eisenstein.series import eisenstein_series
from ray_class.characters import characters_agree


class TestTwistCandidates:
    """Test the candidate CM characters."""

    def test_level_seven_has_one_candidate(self, level7, chi_cubed):
        """Should find χ³ as the only totally odd quadratic character."""
        candidates = cm_twist_candidates(level7)
        assert len(candidates) == 1
        assert characters_agree(candidates[0], chi_cubed)


class TestCMTest:
    """Test witnesses against CM."""

    def test_table_newform_is_not_cm(self, table1_record, chi_cubed):
        """Should refute CM by χ³ at the prime over 5."""
        result = cm_test(table1_record, chi_cubed, 11)
        assert result.status == NOT_CM
        assert str(result.witness) == "((5+√5)/2)"
        assert not result.is_cm_compatible

    def test_eisenstein_eigenvalues_are_not_cm(self, eisenstein_record, chi, chi_cubed):
        """Should refute CM for c(p) = 1 + χ(p), nonzero at the prime over 5."""
        result = cm_test(eisenstein_record(chi), chi_cubed, 60)
        assert result.status == NOT_CM
        assert result.witness.norm == 5

    def test_vanishing_at_inert_primes(self, eisenstein_record, chi_cubed):
        """Should find no witness when c(p) = 1 + χ³(p) vanishes wherever χ³(p) = -1."""
        result = cm_test(eisenstein_record(chi_cubed), chi_cubed, 60)
        assert result.status == CM_COMPATIBLE
        assert result.witness is None
        assert result.tested

    def test_primes_over_the_level_are_skipped(self, eisenstein_record, chi_cubed, level7):
        """Should never test a prime dividing the level."""
        result = cm_test(eisenstein_record(chi_cubed), chi_cubed, 60)
        assert all(not p.divides(level7) for p in result.tested)


class TestCMUpperBound:
    """Test the dimension bound for the CM part."""

    @pytest.fixture(scope="class")
    def lvalue(self, chi):
        return compute_L0(chi, check=False)

    def test_functionals_need_inert_primes_in_the_box(self, chi, chi_cubed, level7, box, lvalue):
        """Should use both generators (5±√5)/2 of the prime over 5 once they fit."""
        small = eisenstein_series(chi, box(3), lvalue=lvalue)
        large = eisenstein_series(chi, box(4), lvalue=lvalue)
        assert cm_functionals([small], chi_cubed, level7) == []
        assert len(cm_functionals([large], chi_cubed, level7)) == 2

    @pytest.mark.parametrize("size,expected", [(3, 1), (4, 0)])
    def test_bound_on_eisenstein_series(self, chi, level7, box, lvalue, size, expected):
        """Should only exclude E_{1,χ} once a witness coefficient is visible."""
        s = eisenstein_series(chi, box(size), lvalue=lvalue)
        assert cm_upper_bound([s], level7) == expected

    def test_empty_space(self, level7):
        assert cm_upper_bound([], level7) == 0
