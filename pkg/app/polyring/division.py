"""Instrumented synthetic division

Counts follow the coefficient-array algorithm: dividing a degree-m
polynomial by a degree-n one costs m-n+1 field divisions (one per quotient
coefficient) and n(m-n+1) additions/multiplications.
"""

from typing import NamedTuple

from app.exceptions import DivisionByZeroPoly
from app.polyring.poly import Poly, divmod_raw


class DivisionResult(NamedTuple):
    quotient: Poly
    remainder: Poly
    d_fielddiv: int
    d_addmul: int


def division_counts(m: int, n: int) -> tuple[int, int]:
    """(field divisions, additions/multiplications) for degrees m >= n"""
    if m < n:
        return 0, 0
    steps = m - n + 1
    return steps, n * steps


def synthetic_division(f1: Poly, f2: Poly) -> DivisionResult:
    """
    Divide f1 by f2 and report the operation counts

    When deg f1 < deg f2 the quotient is 0, the remainder is f1 and both
    counts are 0. A zero dividend is treated the same way.

    Raises:
        DivisionByZeroPoly: If f2 is the zero polynomial
    """
    if f2.is_zero:
        raise DivisionByZeroPoly("Cannot divide by the zero polynomial")
    f1._check(f2)
    if f1.is_zero or len(f1.coeffs) < len(f2.coeffs):
        return DivisionResult(Poly.zero(f1.ctx), f1, 0, 0)

    quot, rem = divmod_raw(f1.coeffs, f2.coeffs, f1.ctx.q)
    fielddiv, addmul = division_counts(len(f1.coeffs) - 1, len(f2.coeffs) - 1)
    return DivisionResult(Poly(f1.ctx, tuple(quot)), Poly(f1.ctx, tuple(rem)), fielddiv, addmul)
