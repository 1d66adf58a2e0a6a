"""
End-to-end runs of the partial weight one search on a space with known answer.

Dividing span(E_{1,χ^-1}·E_{1,χ}) by E_{1,χ^-1} leaves E_{1,χ}, a T_(2) eigenform,
so the search must keep exactly one form. It is excluded from the CM part only
once the box holds a generator of the prime over 5, where χ³ = -1.
"""

import pytest

from core.exceptions import InsufficientBoundError, InvalidInputError, MetadataMismatchError, RankDeficientError
from data_io.records import SpaceFixture
from data_io.reports import render_table, search_report
from eisenstein.lvalues import compute_L0
from eisenstein.series import eisenstein_series
from fourier.series import WeightPair, scalar_mul, truncate
from hecke.operators import apply_T
from ray_class.characters import character_power
from search.algorithm import (
    SearchInput,
    build_ratio_space,
    intersect_with_hecke,
    run_search,
    search_source_bound,
    sweep_levels,
)

WEIGHT_ONE = WeightPair(1, 1)


@pytest.fixture
def search_input(level7, chi, prime2, box):
    return SearchInput(weight=WEIGHT_ONE, level=level7, character=chi, bound=box(4), hecke_prime=prime2)


class TestSearchInput:
    """Test validation of search parameters."""

    def test_even_weight_rejected(self, level7, chi, prime2, box):
        with pytest.raises(InvalidInputError):
            SearchInput(weight=WeightPair(2, 2), level=level7, character=chi, bound=box(4), hecke_prime=prime2)

    def test_level_must_be_squarefree(self, level7, chi, prime2, box):
        with pytest.raises(InvalidInputError):
            SearchInput(weight=WEIGHT_ONE, level=level7 ** 2, character=chi, bound=box(4), hecke_prime=prime2)

    def test_conductor_must_divide_level(self, chi, prime2, box):
        with pytest.raises(InvalidInputError):
            SearchInput(weight=WEIGHT_ONE, level=prime2, character=chi, bound=box(4), hecke_prime=prime2)

    def test_character_parity(self, level7, chi, prime2, box):
        """Should refuse χ² in weight [1,1]."""
        with pytest.raises(InvalidInputError):
            SearchInput(
                weight=WEIGHT_ONE, level=level7, character=character_power(chi, 2), bound=box(4), hecke_prime=prime2
            )

    def test_hecke_prime_must_be_prime(self, level7, chi, box, prime2):
        with pytest.raises(InvalidInputError):
            SearchInput(weight=WEIGHT_ONE, level=level7, character=chi, bound=box(4), hecke_prime=prime2 ** 2)

    def test_source_bound(self, box, prime2):
        """Should double the box for T_(2), once per iteration."""
        assert search_source_bound(box(4), [prime2]) == box(8)
        assert search_source_bound(box(4), [prime2], iterations=2) == box(16)


class TestSearchSteps:
    """Test the ratio space and the Hecke intersection separately."""

    def test_ratio_space_is_the_eisenstein_series(self, search_input, eisenstein_product_space, chi, box):
        """Should divide the product by E_{1,χ^-1} and get E_{1,χ} back."""
        (ratio,) = build_ratio_space(search_input, eisenstein_product_space)
        expected = eisenstein_series(chi, box(8), lvalue=compute_L0(chi, check=False))
        assert ratio.bound == box(8)
        assert ratio.coeffs == expected.coeffs
        assert ratio.constant == expected.constant

    def test_intersection_keeps_the_eigenform(self, search_input, eisenstein_product_space, chi, prime2, box):
        V = build_ratio_space(search_input, eisenstein_product_space)
        (f,) = intersect_with_hecke(V, search_input.context, prime2)
        assert f.bound == box(4)
        image = apply_T(search_input.context, prime2, V[0], target=box(4))
        eigenvalue = f.coeff_field.one() + chi.evaluate(prime2)
        assert image == scalar_mul(eigenvalue, truncate(V[0], box(4)))

    def test_weight_must_match(self, search_input, eisenstein_product_space):
        wrong = SpaceFixture(
            d=5,
            level=eisenstein_product_space.level,
            weight=WeightPair(3, 3),
            coeff_field=eisenstein_product_space.coeff_field,
            provenance="wrong weight",
            basis=eisenstein_product_space.basis,
        )
        with pytest.raises(MetadataMismatchError):
            build_ratio_space(search_input, wrong)

    def test_declared_dimension_checked(self, search_input, eisenstein_product_space):
        """Should refuse a space whose truncation has smaller rank than declared."""
        overstated = SpaceFixture(
            d=5,
            level=eisenstein_product_space.level,
            weight=eisenstein_product_space.weight,
            coeff_field=eisenstein_product_space.coeff_field,
            provenance="overstated",
            basis=eisenstein_product_space.basis,
            dimension=2,
        )
        with pytest.raises(RankDeficientError):
            build_ratio_space(search_input, overstated)

    def test_empty_space(self, search_input, eisenstein_product_space):
        empty = SpaceFixture(
            d=5,
            level=eisenstein_product_space.level,
            weight=eisenstein_product_space.weight,
            coeff_field=eisenstein_product_space.coeff_field,
            provenance="empty",
        )
        assert build_ratio_space(search_input, empty) == []


class TestRunSearch:
    """Test the driver over bound schedules."""

    def test_single_bound(self, search_input, eisenstein_product_space):
        """Should find one form, not CM on the box (4, 4)."""
        report = run_search(search_input, eisenstein_product_space)
        assert (report.dim_V, report.dim_V2, report.cm_bound) == (1, 1, 0)
        assert len(report.candidates) == 1
        assert report.has_candidates
        assert report.provenance == eisenstein_product_space.provenance

    def test_schedule(self, search_input, eisenstein_product_space, box):
        """Should only rule out CM once the witness prime fits in the box."""
        report = run_search(search_input, eisenstein_product_space, [box(3), box(4)])
        assert [d.cm_bound for d in report.diagnostics] == [1, 0]
        assert [d.dim_V2 for d in report.diagnostics] == [1, 1]
        assert report.stabilized
        assert report.input.bound == box(4)
        assert len(report.candidates) == 1

    def test_small_box_has_no_candidate(self, search_input, eisenstein_product_space, box):
        """Should report nothing beyond the CM bound on (3, 3)."""
        report = run_search(search_input, eisenstein_product_space, [box(3)])
        assert report.cm_bound == 1
        assert report.candidates == []
        assert report.diagonalization is None
        assert report.eigenforms == []

    def test_candidate_eigenform(self, search_input, eisenstein_product_space, chi, prime2):
        """Should diagonalise T_(2) on the candidate and find the eigenvalue 1 + χ((2))."""
        report = run_search(search_input, eisenstein_product_space)
        diag = report.diagonalization
        assert diag is not None
        (f,) = report.eigenforms
        assert f == report.candidates[0]
        assert diag.eigenvalues == [f.coeff_field.one() + chi.evaluate(prime2)]
        assert diag.split

    def test_candidate_eigenform_in_report(self, search_input, eisenstein_product_space, chi, prime2):
        """Should carry the Hecke eigenvalue into the structured and table reports."""
        report = run_search(search_input, eisenstein_product_space)
        schema = search_report(report)
        assert schema.eigen.prime == str(prime2)
        assert schema.eigen.splitting_radicand == 1
        assert schema.eigen.eigenvalues == [str(report.diagonalization.eigenvalues[0])]
        assert "splits by √" in render_table(schema)

    def test_eigenform_extraction_failure_is_not_fatal(self, search_input, eisenstein_product_space, mocker):
        """Should still report the candidates when T_q cannot be applied once more."""
        mocker.patch(
            "search.algorithm.diagonalize",
            side_effect=InsufficientBoundError(search_input.bound, search_input.bound, "box too small"),
        )
        report = run_search(search_input, eisenstein_product_space)
        assert len(report.candidates) == 1
        assert report.diagonalization is None

    def test_sweep(self, level7, level14, chi, eisenstein_product_space, box):
        """Should skip levels without a fixture."""
        fixtures = {level7: eisenstein_product_space}
        reports = sweep_levels(
            WEIGHT_ONE,
            [level7, level14],
            lambda level: chi,
            fixtures.get,
            [box(4)],
        )
        assert list(reports) == [level7]
        assert reports[level7].dim_V2 == 1
