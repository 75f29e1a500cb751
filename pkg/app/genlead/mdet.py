"""Determinants of matrices with MultiPoly entries

Small matrices use Laplace expansion along columns with minors memoized on
their row sets; the memo is shared when all cofactors of a column are needed.
Larger ones use fraction-free Bareiss elimination with exact division.
"""

from typing import Dict, List, Sequence, Tuple

from app.genlead.multipoly import MultiPoly

LAPLACE_LIMIT = 6


class LaplaceMinors:
    """det of rows x columns[col:] for any row subset, memoized"""

    def __init__(self, matrix: Sequence[Sequence[MultiPoly]], one: MultiPoly):
        self.matrix = matrix
        self.ncols = len(matrix[0]) if matrix else 0
        self.one = one
        self._memo: Dict[Tuple[Tuple[int, ...], int], MultiPoly] = {}

    def det(self, rows: Tuple[int, ...], col: int = 0) -> MultiPoly:
        if col == self.ncols:
            return self.one
        key = (rows, col)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        total = self.one * 0
        for i, r in enumerate(rows):
            entry = self.matrix[r][col]
            if entry.is_zero:
                continue
            minor = self.det(rows[:i] + rows[i + 1 :], col + 1)
            if minor.is_zero:
                continue
            term = entry * minor
            total = total - term if i % 2 else total + term
        self._memo[key] = total
        return total


def bareiss_det(matrix: Sequence[Sequence[MultiPoly]], one: MultiPoly) -> MultiPoly:
    """Fraction-free elimination; every intermediate division is exact"""
    n = len(matrix)
    if n == 0:
        return one
    rows: List[List[MultiPoly]] = [list(row) for row in matrix]
    sign = 1
    previous = one
    for k in range(n - 1):
        if rows[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not rows[i][k].is_zero), None)
            if swap is None:
                return one * 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]).exact_div(previous)
        previous = pivot
    return rows[n - 1][n - 1] * sign


def det_multipoly(matrix: Sequence[Sequence[MultiPoly]], one: MultiPoly) -> MultiPoly:
    """Determinant of a square MultiPoly matrix (1 for the empty matrix)"""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError(f"Matrix is not square ({n} rows)")
    if n <= LAPLACE_LIMIT:
        return LaplaceMinors(matrix, one).det(tuple(range(n)))
    return bareiss_det(matrix, one)


def column_cofactors(matrix: Sequence[Sequence[MultiPoly]], one: MultiPoly) -> List[MultiPoly]:
    """
    Signed minors (-1)^(r+n)·det(matrix without row r) of an (n+1) x n matrix

    These are the coefficients multiplying the entries of an appended last
    column, i.e. the T-column expansion.
    """
    n = len(matrix) - 1
    if n < 0 or any(len(row) != n for row in matrix):
        raise ValueError("Cofactor expansion needs an (n+1) x n matrix")
    rows = tuple(range(n + 1))
    out = []
    if n <= LAPLACE_LIMIT:
        minors = LaplaceMinors(matrix, one)
        for r in rows:
            minor = minors.det(rows[:r] + rows[r + 1 :])
            out.append(minor if (r + n) % 2 == 0 else -minor)
    else:
        for r in rows:
            minor = bareiss_det([matrix[i] for i in rows if i != r], one)
            out.append(minor if (r + n) % 2 == 0 else -minor)
    return out
