"""Euclid remainders in Schur form

For alphabets A (|A| = e) and B (|B| = d) with g = S^e(T - A) and
f = S^d(T - B), the k-th remainder is a combination

    R_k = ε·S_{(e-d+k)^(k-1)}(B - A - T)·g + S_{k^(e-d+k-1)}(A - B - T)·f

of degree at most d - k. The sign ε is fixed by requiring the top
coefficients to cancel. Rectangle duality between S(B - A) and S(A - B)
makes that ε = closed_form_sign(e, d, k) whenever the first cofactor has a
nonzero top coefficient. Against the plain Euclid chain,
R_k = ν·∏_{j<k} lc(r_j)^2·r_k with ν = ±1 depending only on (e, d, k);
for k = 1, ν = (-1)^(e-d+1).
"""

from typing import NamedTuple, Optional, Tuple

from app.exceptions import IndexOutOfRange, SchurConventionError
from app.polyring import Poly, euclid_trace
from app.symschur.schur import schur_t_poly
from app.symschur.series import Alphabet, s_difference


class SchurRemainder(NamedTuple):
    poly: Poly
    sign: int
    closed_form_sign: int
    u: Poly
    v: Poly

    @property
    def matches_closed_form(self) -> bool:
        return self.sign == self.closed_form_sign


def closed_form_sign(e: int, d: int, k: int) -> int:
    """ε = (-1)^(e-d+1 + (e-d+k-1)(k-1))"""
    return -1 if (e - d + 1 + (e - d + k - 1) * (k - 1)) % 2 else 1


def _check_sizes(k: int, e: int, d: int) -> None:
    if not (e > d >= k >= 1):
        raise IndexOutOfRange(
            f"Schur remainder needs |A| > |B| >= k >= 1, got |A|={e}, |B|={d}, k={k}", e=e, d=d, k=k
        )


def schur_cofactors(k: int, a: Alphabet, b: Alphabet) -> Tuple[Poly, Poly]:
    """(u, v) = (S_{(e-d+k)^(k-1)}(B - A - T), S_{k^(e-d+k-1)}(A - B - T))"""
    e, d = len(a), len(b)
    _check_sizes(k, e, d)
    order = e - d + 2 * k
    u = schur_t_poly((e - d + k,) * (k - 1), s_difference(b, a, order), a.ctx)
    v = schur_t_poly((k,) * (e - d + k - 1), s_difference(a, b, order), a.ctx)
    return u, v


def schur_remainder(k: int, a: Alphabet, b: Alphabet) -> SchurRemainder:
    """
    Evaluate the Schur-form remainder and report the sign convention used

    Raises:
        IndexOutOfRange: Unless |A| > |B| >= k >= 1
        SchurConventionError: If neither sign yields degree <= d - k
    """
    e, d = len(a), len(b)
    u, v = schur_cofactors(k, a, b)
    g = Poly.from_roots(a.ctx, a.elements)
    f = Poly.from_roots(b.ctx, b.elements)
    expected = closed_form_sign(e, d, k)
    for sign in (expected, -expected):
        candidate = u * g * sign + v * f
        if candidate.degree <= d - k:
            return SchurRemainder(candidate, sign, expected, u, v)
    raise SchurConventionError(
        f"No sign reduces the Schur combination to degree <= {d - k}", e=e, d=d, k=k
    )


def remainder_via_schur(k: int, a: Alphabet, b: Alphabet) -> Poly:
    """R_k as a polynomial in T over F_q"""
    return schur_remainder(k, a, b).poly


def euclid_normalization(rem: Poly, g: Poly, f: Poly, k: int) -> Optional[int]:
    """
    ν with rem = ν·∏_{j<k} lc(r_j)^2·r_k, measured on the Euclid chain of (g, f)

    Returns:
        ν as a canonical residue, or None when the chain is not generic
        through step k (the comparison is then meaningless)

    Raises:
        SchurConventionError: If rem is not a scalar multiple of the scaled r_k
    """
    d = len(f.coeffs) - 1
    trace = euclid_trace(g, f)
    history = trace.degree_sequence[:k]
    if history != tuple(range(d - 1, d - k - 1, -1)):
        return None
    ctx = g.ctx
    scale = 1
    for r in trace.remainders[: k - 1]:
        scale = scale * r.lead * r.lead % ctx.q
    target = trace.remainders[k - 1] * scale
    nu = ctx.div(rem.lead, target.lead) if not rem.is_zero else 0
    if rem != target * nu:
        raise SchurConventionError(
            "Schur remainder is not proportional to the Euclid remainder", k=k, rem=str(rem)
        )
    return nu


def lead_vanishing_agrees(rem: Poly, g: Poly, f: Poly, k: int) -> Optional[bool]:
    """
    Whether coeff T^(d-k) of rem is zero exactly when deg r_k < d - k

    Returns:
        None when r_1..r_{k-1} do not have the generic degrees d-1..d-k+1
    """
    d = len(f.coeffs) - 1
    trace = euclid_trace(g, f)
    history = trace.degree_sequence[: k - 1]
    if history != tuple(range(d - 1, d - k, -1)):
        return None
    remainders = trace.remainders
    drops = len(remainders) < k or len(remainders[k - 1].coeffs) - 1 < d - k
    return (rem.coeff(d - k) == 0) == drops
