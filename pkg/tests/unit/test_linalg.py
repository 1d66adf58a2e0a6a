"""
Unit tests for exact linear algebra over Q and over coefficient fields.
"""

import random
from fractions import Fraction

import pytest

from arithmetic.linalg import (
    charpoly,
    express_in_span,
    intersect_spans,
    intersect_spans_dual,
    is_independent,
    mat_mul,
    nullspace,
    rank,
    rref,
    solve,
    span_basis,
    span_equal,
    vec_mat,
)
from fourier.series import coefficient_vector


def _random_rows(seed: int, nrows: int, ncols: int, rank_: int):
    """nrows vectors spanning a random subspace of dimension at most rank_."""
    rng = random.Random(seed)
    generators = [[Fraction(rng.randint(-4, 4)) for _ in range(ncols)] for _ in range(rank_)]
    rows = []
    for _ in range(nrows):
        weights = [Fraction(rng.randint(-2, 2)) for _ in range(rank_)]
        rows.append(vec_mat(weights, generators))
    return rows


class TestElimination:
    """Test echelon forms, rank and kernels."""

    def test_rank_of_dependent_rows(self):
        """Should detect a dependent row."""
        rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)], [Fraction(0), Fraction(1), Fraction(1)]]
        assert rank(rows) == 2
        assert not is_independent(rows)

    def test_rref_pivots(self):
        """Should normalise pivots to 1 with zeros above them."""
        reduced, pivots = rref([[Fraction(2), Fraction(4)], [Fraction(1), Fraction(3)]])
        assert pivots == [0, 1]
        assert reduced == [[1, 0], [0, 1]]

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_nullspace_is_annihilated(self, seed):
        """Should return vectors killed by every row, one per free column."""
        rows = _random_rows(seed, 4, 6, 3)
        kernel = nullspace(rows)
        assert len(kernel) == 6 - rank(rows)
        for k in kernel:
            assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in rows)

    def test_nullspace_of_empty_matrix_needs_width(self):
        """Should give the identity basis for an empty matrix with known width."""
        assert nullspace([], 2) == [[1, 0], [0, 1]]
        with pytest.raises(ValueError):
            nullspace([])

    def test_solve(self):
        """Should solve a consistent system and refuse an inconsistent one."""
        rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
        assert solve(rows, [Fraction(3), Fraction(1)]) == [2, 1]
        assert solve([[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]], [Fraction(1), Fraction(3)]) is None

    def test_works_over_coefficient_fields(self, q_sqrt_m3):
        """Should eliminate over Q(√-3) as well as over Q."""
        w = q_sqrt_m3.sqrt_of(-3)
        one = q_sqrt_m3.one()
        rows = [[one, w], [w, q_sqrt_m3.scalar(-3)]]
        assert rank(rows) == 1
        (k,) = nullspace(rows)
        assert k == [-w, one]


class TestSpans:
    """Test span membership and intersections."""

    def test_express_in_span(self):
        """Should recover coefficients of a vector in the span."""
        basis = [[Fraction(1), Fraction(0), Fraction(1)], [Fraction(0), Fraction(1), Fraction(1)]]
        assert express_in_span(basis, [Fraction(2), Fraction(3), Fraction(5)]) == [2, 3]
        assert express_in_span(basis, [Fraction(1), Fraction(1), Fraction(1)]) is None

    def test_express_in_empty_span(self):
        """Should only express zero in the empty span."""
        assert express_in_span([], [Fraction(0), Fraction(0)]) == []
        assert express_in_span([], [Fraction(1), Fraction(0)]) is None

    def test_span_equal_ignores_spanning_set(self):
        """Should compare spans, not generators."""
        a = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
        b = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(3)]]
        assert span_equal(a, b)

    @pytest.mark.parametrize("seed", [10, 11, 12, 13])
    def test_intersection_methods_agree(self, seed):
        """Should give the same intersection by kernel and by annihilators."""
        a = _random_rows(seed, 4, 7, 4)
        b = _random_rows(seed + 100, 5, 7, 5)
        assert intersect_spans(a, b) == intersect_spans_dual(a, b)

    def test_intersection_of_planes(self):
        """Should intersect two planes in R^3 in a line."""
        a = [[Fraction(1), Fraction(0), Fraction(0)], [Fraction(0), Fraction(1), Fraction(0)]]
        b = [[Fraction(0), Fraction(1), Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]
        assert intersect_spans(a, b) == span_basis([[Fraction(0), Fraction(1), Fraction(0)]])


class TestCharpoly:
    """Test Faddeev-LeVerrier characteristic polynomials."""

    def test_two_by_two(self):
        """Should give x² - tr x + det."""
        m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
        assert charpoly(m) == [5, -5, 1]

    def test_cayley_hamilton(self):
        """Should be annihilated by its own matrix."""
        m = [[Fraction(1), Fraction(2), Fraction(0)], [Fraction(0), Fraction(1), Fraction(-1)], [Fraction(3), Fraction(0), Fraction(2)]]
        coefficients = charpoly(m)
        n = len(m)
        identity = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        total = [[Fraction(0)] * n for _ in range(n)]
        power = identity
        for c in coefficients:
            total = [[t + c * p for t, p in zip(trow, prow)] for trow, prow in zip(total, power)]
            power = mat_mul(power, m)
        assert total == [[0] * n for _ in range(n)]


class TestExpansionSpaceIntersections:
    """Test intersections of spans of truncated expansions against a reordered elimination."""

    @staticmethod
    def _spaces(random_series, box, seed):
        """Two spans of dimension <= 6 on the box (8, 8) sharing a random common part."""
        rng = random.Random(seed)
        shared = rng.randint(0, 3)

        def vectors(first, count):
            return [
                coefficient_vector(random_series(first + i, bound=box(8), density=0.4)) for i in range(count)
            ]

        common = vectors(10_000 + 10 * seed, shared)
        # a unitriangular change of basis of the common part
        mixed = []
        for i in range(len(common)):
            weights = [Fraction(rng.randint(-2, 2)) for _ in range(i)]
            mixed.append(vec_mat(weights + [Fraction(1)], common[: i + 1]))
        a = common + vectors(20_000 + 10 * seed, rng.randint(1, 6 - shared))
        b = mixed + vectors(30_000 + 10 * seed, rng.randint(1, 6 - shared))
        rng.shuffle(a)
        rng.shuffle(b)
        return a, b, common

    @staticmethod
    def _permuted_intersection(a, b, seed):
        """The intersection computed on shuffled columns and rows, mapped back."""
        rng = random.Random(seed)
        width = len(a[0])
        order = list(range(width))
        rng.shuffle(order)
        a = [[v[j] for j in order] for v in reversed(a)]
        b = [[v[j] for j in order] for v in reversed(b)]
        result = []
        for v in intersect_spans_dual(b, a):
            back = [None] * width
            for position, j in enumerate(order):
                back[j] = v[position]
            result.append(back)
        return result

    def test_hundred_random_spaces(self, random_series, box):
        """Should agree with the reordered elimination and the dimension formula on 100 instances."""
        for seed in range(100):
            a, b, common = self._spaces(random_series, box, seed)
            found = intersect_spans(a, b)
            assert len(found) == rank(a) + rank(b) - rank(a + b), seed
            assert found == span_basis(self._permuted_intersection(a, b, seed)), seed
            for v in common:
                assert express_in_span(found, v) is not None, seed
