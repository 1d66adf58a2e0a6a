"""
Unit tests for the Ramanujan bound diagnostic and the coefficient table.
"""

import pytest

from arithmetic.ideals import PrincipalIdeal
from data_io.records import NewformRecord
from fourier.series import WeightPair
from search.ramanujan import FAIL, PASS, SKIPPED, normalized_coefficient_table, ramanujan_bound, ramanujan_check


def weight_one_record(level, qq, value_at_5: int) -> NewformRecord:
    """A weight [1,1] record over Q with c((2)) = 0 and c(p5) = value_at_5."""
    return NewformRecord(
        d=5,
        level=level,
        weight=WeightPair(1, 1),
        character=None,
        coeff_field=qq,
        eigenvalues={
            PrincipalIdeal.unit(5): qq.one(),
            PrincipalIdeal.from_half(4, 0, 5): qq.zero(),
            PrincipalIdeal.from_half(5, 1, 5): qq.scalar(value_at_5),
        },
        provenance="synthetic",
    )


class TestRamanujanCheck:
    """Test |σ(c(p))| <= 2 N(p)^((k1-1)/2)."""

    def test_table_newform(self, table1_record):
        """Should skip (2) and pass at the primes of norm 5 and 9."""
        entries = ramanujan_check(table1_record, 10)
        assert [e.status for e in entries] == [SKIPPED, PASS, PASS]
        assert [e.norm for e in entries] == [4, 5, 9]
        assert entries[1].bound == pytest.approx(50)
        assert entries[2].bound == pytest.approx(162)

    def test_margins_cover_every_embedding(self, table1_record, table1_field):
        """Should give one certified margin per complex embedding."""
        entry = ramanujan_check(table1_record, 5)[1]
        assert len(entry.margins) == len(table1_field.complex_embeddings())
        assert entry.min_margin > 0
        assert entry.width < 1e-30

    def test_violation_detected(self, level7, qq):
        """Should fail c(p) = 3 against the weight one bound 2."""
        entries = ramanujan_check(weight_one_record(level7, qq, 3), 5)
        assert [e.status for e in entries] == [PASS, FAIL]
        assert entries[1].min_margin == pytest.approx(-1)

    def test_boundary_value_passes(self, level7, qq):
        """Should pass c(p) = 2 exactly on the bound."""
        entries = ramanujan_check(weight_one_record(level7, qq, 2), 5)
        assert entries[1].status != FAIL

    @pytest.mark.parametrize("norm,k1,expected", [(5, 5, 50), (9, 5, 162), (4, 1, 2), (11, 3, 22)])
    def test_bound(self, norm, k1, expected):
        bound = ramanujan_bound(norm, k1)
        assert float(bound.a) <= expected <= float(bound.b)


class TestCoefficientTable:
    """Test the normalised coefficient listing."""

    def test_rows_by_norm(self, table1_record):
        """Should list primes by norm with their generators."""
        rows = normalized_coefficient_table(table1_record)
        assert [row.norm for row in rows] == sorted(row.norm for row in rows)
        assert (rows[0].generator, rows[0].norm, rows[0].value) == ("2", 4, "-4+4√-3")
        assert (rows[1].generator, rows[1].norm) == ("(5+√5)/2", 5)
        assert len(rows) == len(table1_record.primes())
