"""Resultants over F_q

resultant_sylvester is the normative oracle; resultant_euclid follows the
remainder-sequence recursion

    res(A, B) = (-1)^(mn) · lc(B)^(m - deg R) · res(B, R),   R = A mod B

with res(A, c) = c^m and res(c, B) = c^n for constants.
"""

from typing import List

from app.exceptions import ZeroInput
from app.field import FieldElem, det_mod
from app.polyring.poly import Poly, divmod_raw


def _check_nonzero(g: Poly, f: Poly) -> None:
    g._check(f)
    if g.is_zero or f.is_zero:
        raise ZeroInput("Resultant of a zero polynomial is undefined", g=str(g), f=str(f))


def resultant_euclid_raw(a: List[int], b: List[int], q: int) -> int:
    """Resultant of stripped nonzero coefficient lists"""
    acc = 1
    while True:
        m = len(a) - 1
        n = len(b) - 1
        if n == 0:
            return acc * pow(b[0], m, q) % q
        if m == 0:
            return acc * pow(a[0], n, q) % q
        rem = divmod_raw(a, b, q)[1]
        if not rem:
            return 0
        r = len(rem) - 1
        if (m * n) & 1:
            acc = -acc
        acc = acc * pow(b[-1], m - r, q) % q
        a, b = b, rem


def resultant_euclid(g: Poly, f: Poly) -> FieldElem:
    """
    Resultant by the Euclidean remainder recursion

    Raises:
        ZeroInput: If either input is zero
    """
    _check_nonzero(g, f)
    return g.ctx.elem(resultant_euclid_raw(list(g.coeffs), list(f.coeffs), g.ctx.q))


def sylvester_matrix(g: Poly, f: Poly) -> List[List[int]]:
    """(m+n)×(m+n) Sylvester matrix: n shifted rows of g, then m of f"""
    m = len(g.coeffs) - 1
    n = len(f.coeffs) - 1
    size = m + n
    g_desc = list(reversed(g.coeffs))
    f_desc = list(reversed(f.coeffs))
    rows: List[List[int]] = []
    for shift in range(n):
        rows.append([0] * shift + g_desc + [0] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([0] * shift + f_desc + [0] * (size - shift - n - 1))
    return rows


def resultant_sylvester(g: Poly, f: Poly) -> FieldElem:
    """
    Resultant as the Sylvester determinant over F_q

    Raises:
        ZeroInput: If either input is zero
    """
    _check_nonzero(g, f)
    return g.ctx.elem(det_mod(sylvester_matrix(g, f), g.ctx.q))
