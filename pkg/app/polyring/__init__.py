"""Univariate polynomials over F_q

Instrumented synthetic division, the counted Euclidean trace, the
genericity test and resultants.
"""

from app.polyring.poly import (
    NEG_INF,
    NegInfDegree,
    Poly,
    gcd_classical,
    poly_format,
    poly_parse,
)
from app.polyring.division import DivisionResult, division_counts, synthetic_division
from app.polyring.euclid import (
    EuclidTrace,
    TraceReport,
    euclid_raw,
    euclid_trace,
    is_generic,
    replay_trace,
)
from app.polyring.resultant import (
    resultant_euclid,
    resultant_euclid_raw,
    resultant_sylvester,
    sylvester_matrix,
)

__all__ = [
    "NEG_INF",
    "NegInfDegree",
    "Poly",
    "gcd_classical",
    "poly_format",
    "poly_parse",
    "DivisionResult",
    "division_counts",
    "synthetic_division",
    "EuclidTrace",
    "TraceReport",
    "euclid_raw",
    "euclid_trace",
    "is_generic",
    "replay_trace",
    "resultant_euclid",
    "resultant_euclid_raw",
    "resultant_sylvester",
    "sylvester_matrix",
]
