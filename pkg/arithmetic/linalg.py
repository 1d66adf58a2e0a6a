"""
Exact linear algebra over Q and over multiquadratic coefficient fields.

Entries are Fractions or CoeffElements; anything supporting + - * / and
truthiness-as-nonzero works. Matrices are lists of rows. Pivots are always the
lowest usable row index, so every output is deterministic.
"""

from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

Matrix = List[List[Any]]
Vector = List[Any]


def _zero_like(x):
    return x * 0


def _one_like(x):
    return x * 0 + 1


def transpose(rows: Matrix) -> Matrix:
    if not rows:
        return []
    return [list(column) for column in zip(*rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    columns = transpose(b)
    out = []
    for row in a:
        out_row = []
        for column in columns:
            total = _zero_like(row[0])
            for x, y in zip(row, column):
                if x and y:
                    total = total + x * y
            out_row.append(total)
        out.append(out_row)
    return out


def vec_mat(v: Vector, rows: Matrix) -> Vector:
    """The combination sum v_i * rows[i]."""
    total = [_zero_like(entry) for entry in rows[0]]
    for coefficient, row in zip(v, rows):
        if not coefficient:
            continue
        total = [t + coefficient * entry for t, entry in zip(total, row)]
    return total


def row_echelon(rows: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Fraction-free (Bareiss) forward elimination.

    Returns the nonzero echelon rows and their pivot columns. Each update
    row_i <- (p*row_i - a*row_pivot)/p_prev is a nonzero multiple of a row
    operation, so the row space is preserved.
    """
    m = [list(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    previous = _one_like(m[0][0]) if ncols else 1
    r = 0
    for c in range(ncols):
        found = next((i for i in range(r, len(m)) if m[i][c]), None)
        if found is None:
            continue
        m[r], m[found] = m[found], m[r]
        pivot = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            if a:
                m[i] = [(pivot * x - a * y) / previous for x, y in zip(m[i], m[r])]
            elif not (pivot == previous):
                m[i] = [pivot * x / previous for x in m[i]]
        previous = pivot
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    return len(row_echelon(rows)[1])


def rref(rows: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form: pivots 1, zeros above and below."""
    echelon, pivots = row_echelon(rows)
    reduced = []
    for row, c in zip(echelon, pivots):
        inverse = 1 / row[c]
        reduced.append([x * inverse for x in row])
    for k in range(len(reduced) - 1, -1, -1):
        c = pivots[k]
        for i in range(k):
            a = reduced[i][c]
            if a:
                reduced[i] = [x - a * y for x, y in zip(reduced[i], reduced[k])]
    return reduced, pivots


def nullspace(rows: Matrix, ncols: Optional[int] = None, zero: Any = None) -> Matrix:
    """Basis of {x : rows . x = 0}, one vector per free column (free entry 1)."""
    if rows:
        ncols = len(rows[0])
        zero = _zero_like(rows[0][0]) if ncols else zero
    if ncols is None:
        raise ValueError("ncols is required for an empty matrix")
    if zero is None:
        zero = Fraction(0)
    one = zero + 1
    reduced, pivots = rref(rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [zero] * ncols
        vector[free] = one
        for row, c in zip(reduced, pivots):
            if row[free]:
                vector[c] = -row[free]
        basis.append(vector)
    return basis


def solve(rows: Matrix, rhs: Vector) -> Optional[Vector]:
    """One solution x of rows . x = rhs (free variables 0), or None."""
    if not rows:
        return None
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    ncols = len(rows[0])
    if pivots and pivots[-1] == ncols:
        return None
    zero = _zero_like(rows[0][0])
    x = [zero] * ncols
    for row, c in zip(reduced, pivots):
        x[c] = row[ncols]
    return x


def express_in_span(basis: Matrix, vector: Vector) -> Optional[Vector]:
    """Coefficients c with sum c_i basis_i = vector, or None when outside the span."""
    if not basis:
        return [] if not any(vector) else None
    return solve(transpose(basis), vector)


def span_basis(vectors: Matrix) -> Matrix:
    """Canonical basis (rref rows) of the span."""
    return rref(vectors)[0] if vectors else []


def span_equal(a: Matrix, b: Matrix) -> bool:
    return span_basis(a) == span_basis(b)


def intersect_spans(a: Matrix, b: Matrix) -> Matrix:
    """
    span(a) ∩ span(b) via the nullspace of [A | -B], where the columns of A and B
    are the spanning vectors. Returned as an rref basis.
    """
    if not a or not b:
        return []
    stacked = transpose([list(v) for v in a] + [[-x for x in v] for v in b])
    kernel = nullspace(stacked)
    vectors = [vec_mat(k[: len(a)], a) for k in kernel]
    vectors = [v for v in vectors if any(v)]
    return span_basis(vectors)


def intersect_spans_dual(a: Matrix, b: Matrix) -> Matrix:
    """
    span(a) ∩ span(b) as the common annihilator of ann(a) + ann(b).
    Independent of intersect_spans; the two must agree.
    """
    if not a or not b:
        return []
    ncols = len(a[0])
    zero = _zero_like(a[0][0])
    annihilator = nullspace(a) + nullspace(b)
    if not annihilator:
        return span_basis(a)
    return span_basis(nullspace(annihilator, ncols, zero))


def charpoly(matrix: Matrix) -> List[Any]:
    """
    Coefficients [c0, c1, ..., cn] (low to high, cn = 1) of det(xI - M)
    by Faddeev-LeVerrier.
    """
    n = len(matrix)
    if n == 0:
        return [Fraction(1)]
    zero = _zero_like(matrix[0][0])
    one = zero + 1
    identity = [[one if i == j else zero for j in range(n)] for i in range(n)]
    coefficients = [zero] * (n + 1)
    coefficients[n] = one
    current = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        current = mat_mul(matrix, current)
        current = [
            [x + coefficients[n - k + 1] * e for x, e in zip(row, id_row)]
            for row, id_row in zip(current, identity)
        ]
        product = mat_mul(matrix, current)
        trace = zero
        for i in range(n):
            trace = trace + product[i][i]
        coefficients[n - k] = trace * Fraction(-1, k)
    return coefficients


def is_independent(vectors: Sequence[Vector]) -> bool:
    return rank([list(v) for v in vectors]) == len(vectors)
