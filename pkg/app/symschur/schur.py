"""Schur determinants over F_q

S_J = det(S^{j_c + c - r}) with rows r and columns c counted from zero.
The T-column form appends one more row and a last column of powers of T;
expanding along that column gives S_J(X - T) as a polynomial in T.
"""

from typing import Callable, List, Sequence, Union

from app.field import FieldCtx, det_mod
from app.polyring import Poly
from app.symschur.series import Alphabet, SymSeries, s_difference

Entries = Union[SymSeries, Callable[[int], int]]


def _entry(entries: Entries, i: int) -> int:
    if i < 0:
        return 0
    return entries[i] if isinstance(entries, SymSeries) else entries(i)


def _validate_index(J: Sequence[int]) -> None:
    if any(j < 0 for j in J):
        raise ValueError(f"Schur index must be nonnegative, got {tuple(J)}")


def schur_det(J: Sequence[int], entries: Entries, q: int) -> int:
    """
    S_J evaluated from one family of complete functions

    Args:
        J: Index (j_1, ..., j_n), entries >= 0
        entries: S^i accessor; negative superscripts read as 0
        q: Field modulus

    Returns:
        Canonical residue; 1 for the empty index
    """
    _validate_index(J)
    n = len(J)
    matrix = [[_entry(entries, J[c] + c - r) for c in range(n)] for r in range(n)]
    return det_mod(matrix, q)


def multi_schur_det(J: Sequence[int], columns: Sequence[Entries], q: int) -> int:
    """S_J with a separate family of complete functions per column"""
    _validate_index(J)
    if len(columns) != len(J):
        raise ValueError(f"Need one column family per index entry: {len(J)} != {len(columns)}")
    n = len(J)
    matrix = [[_entry(columns[c], J[c] + c - r) for c in range(n)] for r in range(n)]
    return det_mod(matrix, q)


def t_column_minors(J: Sequence[int], entries: Entries, q: int) -> List[int]:
    """
    Signed cofactors of the last column of the T-column determinant

    The matrix has n + 1 rows, entries S^{j_c + c - r} in its first n columns
    and T^{ell + n - r} in the last one. Entry r of the result is the
    coefficient multiplying T^{ell + n - r}.
    """
    _validate_index(J)
    n = len(J)
    rows = [[_entry(entries, J[c] + c - r) for c in range(n)] for r in range(n + 1)]
    cofactors = []
    for r in range(n + 1):
        minor = [row for i, row in enumerate(rows) if i != r]
        sign = 1 if (r + n) % 2 == 0 else -1
        cofactors.append(sign * det_mod(minor, q) % q)
    return cofactors


def schur_t_poly(J: Sequence[int], entries: Entries, ctx: FieldCtx, ell: int = 0) -> Poly:
    """S_{J; ell}(X; T), i.e. S_J(X - T)·T^ell, as a polynomial in T"""
    n = len(J)
    coeffs = [0] * (ell + n + 1)
    for r, c in enumerate(t_column_minors(J, entries, ctx.q)):
        coeffs[ell + n - r] = c
    return Poly.from_coeffs(ctx, coeffs)


def lascoux_148_check(J: Sequence[int], k: int, a: Alphabet, b: Alphabet, t: int) -> bool:
    """
    S_J(A - B - t)·t^k equals the T-column determinant at T = t

    Returns:
        True when both sides agree in F_q
    """
    ctx = a.ctx
    q = ctx.q
    size = (max(J) if J else 0) + len(J) + 1
    shifted = s_difference(a, b + Alphabet.of(ctx, [t]), size)
    left = schur_det(J, shifted, q) * pow(t % q, k, q) % q
    right = schur_t_poly(J, s_difference(a, b, size), ctx, ell=k).eval(t)
    return left == right
