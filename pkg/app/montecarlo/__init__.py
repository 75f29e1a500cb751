"""Seeded Monte-Carlo estimation of gcd statistics"""

from app.montecarlo.sampler import (
    BinomialReport,
    SampleReport,
    binomial_sanity,
    monte_carlo,
    sample_chunk,
    sample_points,
)

__all__ = [
    "BinomialReport",
    "SampleReport",
    "binomial_sanity",
    "monte_carlo",
    "sample_chunk",
    "sample_points",
]
