"""Seeded Monte-Carlo sampling of monic f of degree d

Sample i reads coefficient s_(j+1) from SplitMix64 output i·d + j of the
master seed, reduced mod q. Draws are with replacement, and each chunk of
sample indices can be produced independently, so results do not depend on
the number of workers.
"""

from fractions import Fraction
from math import sqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.census import (
    CensusAccumulator,
    accumulate_census,
    chunk_ranges,
    map_chunks,
)
from app.estimator import main_terms
from app.experiment.report import ExactValue, Report
from app.factorpat import FactorProfile, profile
from app.logger import get_logger
from app.polyring import Poly, poly_format
from app.settings import get_settings
from app.splitmix import splitmix64_block

logger = get_logger("montecarlo")


def sample_points(seed: int, start: int, count: int, q: int, d: int) -> np.ndarray:
    """(count, d) array of (s_1, ..., s_d) for samples start .. start+count-1"""
    raw = splitmix64_block(seed, start * d, count * d)
    return (raw % np.uint64(q)).astype(np.int64).reshape(count, d)


def sample_chunk(task: Tuple[Tuple[int, ...], int, int, int, int, int]) -> CensusAccumulator:
    """Worker: accumulate samples with index in [start, stop)"""
    g_coeffs, q, d, seed, start, stop = task
    g_list = list(g_coeffs)
    acc = CensusAccumulator(d)
    for row in sample_points(seed, start, stop - start, q, d).tolist():
        acc.add(g_list, row[::-1] + [1], q)
    return acc


class SampleReport(Report):
    """Sample statistics next to the main terms they estimate"""

    kind: str = "sample"
    mode: str = "sample"
    q: int
    e: int
    d: int
    g: str
    n: int
    seed: int
    profile: FactorProfile
    mu: ExactValue
    beta: ExactValue
    gamma: ExactValue
    E_t: Dict[str, ExactValue]
    E_g: ExactValue
    P0: ExactValue
    PG: ExactValue
    eps1_rel: Optional[ExactValue]
    eps1_abs: ExactValue
    eps2: Optional[ExactValue]
    k_exceeds_d: bool

    def table_row(self, label: int, eps1: str = "rel") -> List[object]:
        """Row in the order (label, μ, E_g, β, P0, γ, PG, ε1, ε2)"""
        chosen = self.eps1_abs if eps1 == "abs" else self.eps1_rel
        return [
            label,
            self.mu.value,
            self.E_g.value,
            self.beta.value,
            self.P0.value,
            self.gamma.value,
            self.PG.value,
            chosen.value if chosen is not None else None,
            self.eps2.value if self.eps2 is not None else None,
        ]

    def csv_table(self):
        label = "lambda_star_k"
        header = [label, "mu", "E_g", "beta", "P0", "gamma", "PG", "eps1", "eps2"]
        return header, [self.table_row(self.profile.lam_star(self.profile.k))]


def _report(
    acc: CensusAccumulator, g: Poly, prof: FactorProfile, seed: int, mode: str
) -> SampleReport:
    q, d = g.ctx.q, acc.d
    e = prof.degree
    n = acc.count
    terms = main_terms(q, e, d, prof)
    mu = Fraction(sum(i * b for i, b in enumerate(acc.B)), n)
    beta = Fraction(acc.B[0], n)
    gamma = Fraction(acc.generic, n)
    err1 = abs(mu - terms.E_g)
    return SampleReport(
        mode=mode,
        q=q,
        e=e,
        d=d,
        g=poly_format(g),
        n=n,
        seed=seed,
        profile=prof,
        mu=ExactValue.of(mu),
        beta=ExactValue.of(beta),
        gamma=ExactValue.of(gamma),
        E_t={
            "div": ExactValue.of(Fraction(acc.t_div, n)),
            "fielddiv": ExactValue.of(Fraction(acc.t_fielddiv, n)),
            "addmul": ExactValue.of(Fraction(acc.t_addmul, n)),
        },
        E_g=ExactValue.of(terms.E_g),
        P0=ExactValue.of(terms.P0),
        PG=ExactValue.of(terms.PG),
        eps1_rel=ExactValue.of(err1 / terms.E_g) if terms.E_g else None,
        eps1_abs=ExactValue.of(err1),
        eps2=ExactValue.of(abs(beta - terms.P0) / terms.P0) if terms.P0 else None,
        k_exceeds_d=terms.k_exceeds_d,
    )


def monte_carlo(
    g: Poly,
    d: int,
    n: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    enumeration: bool = False,
    cap: Optional[int] = None,
) -> SampleReport:
    """
    Estimate μ, β and γ for g over monic f of degree d

    Args:
        g: Fixed polynomial of degree e > d
        d: Degree of f
        n: Sample size (default from settings); ignored with enumeration
        seed: Master seed (default from settings)
        workers: Worker processes (capped by EUCLAB_THREADS)
        enumeration: Visit every f exactly once instead of sampling

    Raises:
        ValueError: If n < 1
        EnumerationTooLarge: In enumeration mode when q^d exceeds the cap
    """
    settings = get_settings()
    n = settings.sampling.sample_size if n is None else n
    seed = settings.sampling.seed if seed is None else seed
    if n < 1:
        raise ValueError(f"Sample size must be >= 1, got {n}")
    e = len(g.coeffs) - 1
    if not 1 <= d < e:
        raise ValueError(f"Sampling needs 1 <= d < e, got d={d}, e={e}")
    prof = profile(g)
    q = g.ctx.q

    if enumeration:
        logger.info("Enumeration run started", q=q, e=e, d=d, size=q**d)
        report = _report(accumulate_census(g, d, cap, workers), g, prof, seed, "enumeration")
    else:
        logger.info("Sampling started", q=q, e=e, d=d, n=n, seed=seed)
        chunk = settings.compute.chunk_size
        tasks = [(g.coeffs, q, d, seed, start, stop) for start, stop in chunk_ranges(n, chunk)]
        acc = CensusAccumulator(d)
        for part in map_chunks(sample_chunk, tasks, workers):
            acc.merge(part)
        report = _report(acc, g, prof, seed, "sample")

    logger.info(
        "Sampling completed",
        mode=report.mode,
        n=report.n,
        mu=report.mu.value,
        beta=report.beta.value,
        gamma=report.gamma.value,
    )
    return report


class BinomialReport(Report):
    """Spread of β across independent seeds against the binomial prediction"""

    kind: str = "binomial"
    q: int
    d: int
    g: str
    n: int
    seeds: List[int]
    betas: List[float]
    p0: ExactValue
    p0_source: str
    empirical_std: float
    theoretical_std: float
    ratio: Optional[float]
    within_factor_two: bool


def binomial_sanity(
    g: Poly,
    d: int,
    n: int,
    seeds: Sequence[int],
    workers: Optional[int] = None,
) -> BinomialReport:
    """
    Compare the empirical std of β over seeds with sqrt(P0(1 - P0)/n)

    P0 is the exact census value when q^d fits the enumeration cap and the
    main term 1 - λ*_k/q^k otherwise.
    """
    if len(seeds) < 2:
        raise ValueError("Binomial sanity check needs at least two seeds")
    q = g.ctx.q
    if q**d <= get_settings().compute.enumeration_cap:
        acc = accumulate_census(g, d, workers=workers)
        p0 = Fraction(acc.B[0], acc.count)
        source = "census"
    else:
        prof = profile(g)
        p0 = main_terms(q, prof.degree, d, prof).P0
        source = "main_term"

    betas = [float(monte_carlo(g, d, n, seed, workers).beta.as_fraction()) for seed in seeds]
    empirical = float(np.std(np.array(betas), ddof=1))
    theoretical = sqrt(float(p0 * (1 - p0)) / n)
    ratio = empirical / theoretical if theoretical > 0 else None
    return BinomialReport(
        q=q,
        d=d,
        g=poly_format(g),
        n=n,
        seeds=list(seeds),
        betas=betas,
        p0=ExactValue.of(p0),
        p0_source=source,
        empirical_std=empirical,
        theoretical_std=theoretical,
        ratio=ratio,
        within_factor_two=ratio is not None and 0.5 <= ratio <= 2.0,
    )
