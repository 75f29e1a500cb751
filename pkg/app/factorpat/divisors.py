"""Divisor counts and their bounds

η_i is the number of distinct monic degree-i divisors of g. It is computed
exactly from the classes n_{j,m}: each distinct factor of degree j and
multiplicity m contributes (1 + X^j + ... + X^{jm}) to a generating product.
"""

from math import comb
from typing import List, Sequence, Tuple

from app.factorpat.profile import FactorProfile


def _truncated_product(factors: Sequence[List[int]], limit: int) -> List[int]:
    """Integer polynomial product truncated above X^limit"""
    acc = [1] + [0] * limit
    for factor in factors:
        out = [0] * (limit + 1)
        for i, a in enumerate(acc):
            if a:
                for j, b in enumerate(factor):
                    if i + j > limit:
                        break
                    out[i + j] += a * b
        acc = out
    return acc


def _lam(lam: Sequence[int], i: int) -> int:
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def divisor_count_eta(profile: FactorProfile, i: int) -> int:
    """
    Exact number of distinct monic degree-i divisors of g

    Raises:
        ValueError: If i is outside 0..deg g
    """
    if not 0 <= i <= profile.degree:
        raise ValueError(f"Divisor degree must lie in 0..{profile.degree}, got {i}")
    factors: List[List[int]] = []
    for cls in profile.factor_classes:
        block = [0] * (cls.degree * cls.multiplicity + 1)
        for t in range(cls.multiplicity + 1):
            block[t * cls.degree] = 1
        factors.extend([block] * cls.count)
    return _truncated_product(factors, i)[i]


def eta_bounds(lam: Sequence[int], k: int, i: int) -> Tuple[int, int]:
    """
    (binomial, power) upper bounds on η_i

    binomial = C(kλ_k + ... + iλ_i, i), power = 2^(λ_k + ... + λ_i).
    """
    if k > i:
        raise ValueError(f"eta bounds need k <= i, got k={k}, i={i}")
    weighted = sum(j * _lam(lam, j) for j in range(k, i + 1))
    total = sum(_lam(lam, j) for j in range(k, i + 1))
    return comb(weighted, i), 2**total


def gf_coefficient(lam: Sequence[int], k: int, i: int) -> int:
    """[X^i] ∏_{j=k}^{i} (1 + X^j)^λ_j"""
    if i < 0:
        return 0
    factors: List[List[int]] = []
    for j in range(k, i + 1):
        block = [0] * (j + 1)
        block[0] = 1
        block[j] = 1
        factors.extend([block] * _lam(lam, j))
    return _truncated_product(factors, i)[i]
