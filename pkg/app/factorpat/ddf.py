"""Distinct-degree splitting

The degree-i block of a squarefree f is gcd(f, T^(q^i) - T) once the
lower blocks are divided out. Only block sizes are kept.
"""

from typing import Tuple

from app.exceptions import NotSquarefree
from app.polyring import Poly, gcd_classical


def _require_squarefree(f: Poly) -> None:
    derivative = f.derivative()
    if derivative.is_zero or len(gcd_classical(f, derivative).coeffs) > 1:
        raise NotSquarefree(f"Polynomial is not squarefree: {f}", poly=str(f))


def ddf_pattern(gsf: Poly) -> Tuple[int, ...]:
    """
    Number of distinct irreducible factors of each degree

    Entry i-1 counts the factors of degree i; the tuple has length deg gsf.

    Raises:
        NotSquarefree: If gsf has a repeated factor
    """
    f = gsf.monic()
    n = len(f.coeffs) - 1
    if n < 1:
        return ()
    _require_squarefree(f)

    counts = [0] * n
    ctx = f.ctx
    x = Poly.monomial(ctx, 1)
    h = x % f
    i = 1
    while 2 * i <= len(f.coeffs) - 1:
        h = h.pow_mod(ctx.q, f)
        block = gcd_classical(f, h - x)
        block_degree = len(block.coeffs) - 1
        if block_degree > 0:
            if block_degree % i:
                raise NotSquarefree(
                    f"Degree-{i} block has degree {block_degree}", poly=str(gsf), block=i
                )
            counts[i - 1] += block_degree // i
            f = f // block
            h = h % f
        i += 1
    remaining = len(f.coeffs) - 1
    if remaining > 0:
        counts[remaining - 1] += 1
    return tuple(counts)


def is_irreducible(p: Poly) -> bool:
    """Irreducibility as 'one distinct-degree block at deg p'"""
    n = len(p.coeffs) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    derivative = p.derivative()
    if derivative.is_zero or len(gcd_classical(p, derivative).coeffs) > 1:
        return False
    return ddf_pattern(p)[n - 1] == 1
