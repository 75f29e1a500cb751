"""Dense linear algebra over F_q"""

from typing import List, Sequence


def det_mod(matrix: Sequence[Sequence[int]], q: int) -> int:
    """
    Determinant of a square matrix over F_q by Gaussian elimination

    Pivot search handles singular matrices (the result is then 0).
    The empty matrix has determinant 1.
    """
    n = len(matrix)
    rows: List[List[int]] = [[x % q for x in row] for row in matrix]
    for row in rows:
        if len(row) != n:
            raise ValueError(f"Matrix is not square: {n} rows, row of length {len(row)}")

    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pivot_value = rows[col][col]
        det = det * pivot_value % q
        inv = pow(pivot_value, -1, q)
        for r in range(col + 1, n):
            factor = rows[r][col] * inv % q
            if factor:
                target = rows[r]
                source = rows[col]
                for c in range(col, n):
                    target[c] = (target[c] - factor * source[c]) % q
    return det % q
