"""Closed-form estimators and two-sided bounds

All values are exact Fractions (or ints for counts). When k > d no factor
of g can divide f; the estimators then return the exact degenerate values
(E[X_g] = 0, P0 = 1, empty union) and callers raise the k_exceeds_d flag.
"""

from fractions import Fraction
from math import comb
from typing import Dict, NamedTuple, Tuple

from app.factorpat import FactorProfile, gf_coefficient, divisor_count_eta


class MainTerms(NamedTuple):
    E_g: Fraction
    P0: Fraction
    PG: Fraction
    k_exceeds_d: bool


class CostWindow(NamedTuple):
    center: int
    sym_lower: Fraction
    sym_upper: Fraction
    lemma_lower: Fraction
    lemma_upper: Fraction


COST_KINDS = ("div", "fielddiv", "addmul")


def generic_fraction(q: int, e: int, d: int) -> Fraction:
    """P_G = 1 - d(2e-d+1)/(2q)"""
    return 1 - Fraction(d * (2 * e - d + 1), 2 * q)


def cost_precondition(q: int, e: int, d: int) -> bool:
    """q > d(2e-d+1)/2"""
    return 2 * q > d * (2 * e - d + 1)


def main_terms(q: int, e: int, d: int, prof: FactorProfile) -> MainTerms:
    """E_g = kλ*_k/q^k, P0 = 1 - λ*_k/q^k, P_G = 1 - d(2e-d+1)/(2q)"""
    pg = generic_fraction(q, e, d)
    k = prof.k
    if k > d:
        return MainTerms(Fraction(0), Fraction(1), pg, True)
    lam_k = prof.lam_star(k)
    return MainTerms(Fraction(k * lam_k, q**k), 1 - Fraction(lam_k, q**k), pg, False)


def union_bounds(q: int, d: int, prof: FactorProfile) -> Tuple[int, int]:
    """
    Bounds on |B_1 ∪ ... ∪ B_d|, the f sharing a factor with g

    lower = λ*_k q^(d-k) - C(λ*_k, 2) q^max(d-2k, 0)
    upper = λ*_k q^(d-k) + Σ_{i=k+1}^{d} λ*_i q^(d-i)

    The same pair bounds ⋃_{j=i}^{d} B_j for every i <= k.
    """
    k = prof.k
    if k > d:
        return 0, 0
    lam_k = prof.lam_star(k)
    center = lam_k * q ** (d - k)
    lower = center - comb(lam_k, 2) * q ** max(d - 2 * k, 0)
    upper = center + sum(prof.lam_star(i) * q ** (d - i) for i in range(k + 1, d + 1))
    return lower, upper


def coprime_bounds(q: int, d: int, prof: FactorProfile) -> Tuple[Fraction, Fraction]:
    """
    Bounds on P0, the probability that gcd(g, f) = 1

    1 - λ*_k/q^k - Σ_{i=k+1}^{d} λ*_i/q^i <= P0 <= 1 - λ*_k/q^k + C(λ*_k,2)/q^min(2k,d)
    """
    k = prof.k
    if k > d:
        return Fraction(1), Fraction(1)
    lam_k = prof.lam_star(k)
    base = 1 - Fraction(lam_k, q**k)
    lower = base - sum(Fraction(prof.lam_star(i), q**i) for i in range(k + 1, d + 1))
    upper = base + Fraction(comb(lam_k, 2), q ** min(2 * k, d))
    return lower, upper


def avgdeg_bounds(
    q: int, e: int, d: int, prof: FactorProfile
) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Bounds on E[X_g], the average degree of gcd(g, f)

    lower = kλ*_k/q^k - C(λ*_k,2)·k/q^min(2k,d)
    upper = kλ*_k/q^k + Σ_{i=k+1}^{d} (i/q^i)·[X^i]∏(1+X^j)^λ_j
    simple_upper = de/q^k
    """
    k = prof.k
    simple = Fraction(d * e, q**k)
    if k > d:
        return Fraction(0), Fraction(0), simple
    lam_k = prof.lam_star(k)
    center = Fraction(k * lam_k, q**k)
    lower = center - Fraction(comb(lam_k, 2) * k, q ** min(2 * k, d))
    upper = center + sum(
        Fraction(i * gf_coefficient(prof.lambda_, k, i), q**i) for i in range(k + 1, d + 1)
    )
    return lower, upper, simple


def avgdeg_eta_upper(q: int, d: int, prof: FactorProfile) -> Fraction:
    """kλ*_k/q^k + Σ_{i=k+1}^{d} (i/q^i)·η_i with exact divisor counts"""
    k = prof.k
    if k > d:
        return Fraction(0)
    center = Fraction(k * prof.lam_star(k), q**k)
    return center + sum(
        Fraction(i * divisor_count_eta(prof, i), q**i) for i in range(k + 1, d + 1)
    )


def cost_bounds(q: int, e: int, d: int) -> Dict[str, CostWindow]:
    """
    Windows on the average Euclid cost for each counter

    Centers are d+1 (polynomial divisions), e+d+1 (field divisions) and de
    (additions/multiplications). The symmetric window is center·(1 ± de/q);
    the lemma window is [center·P_G, center·(1 + de/q)].
    """
    spread = Fraction(d * e, q)
    pg = generic_fraction(q, e, d)
    windows: Dict[str, CostWindow] = {}
    for kind, center in zip(COST_KINDS, (d + 1, e + d + 1, d * e)):
        windows[kind] = CostWindow(
            center=center,
            sym_lower=center * (1 - spread),
            sym_upper=center * (1 + spread),
            lemma_lower=center * pg,
            lemma_upper=center * (1 + spread),
        )
    return windows


def generic_count_lower(q: int, e: int, d: int) -> Fraction:
    """|G| >= q^d (1 - d(2e-d+1)/(2q))"""
    return q**d * generic_fraction(q, e, d)
