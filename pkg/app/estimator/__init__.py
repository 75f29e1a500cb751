"""Closed-form estimators and two-sided bounds for gcd statistics"""

from app.estimator.bounds import (
    COST_KINDS,
    CostWindow,
    MainTerms,
    avgdeg_bounds,
    avgdeg_eta_upper,
    coprime_bounds,
    cost_bounds,
    cost_precondition,
    generic_count_lower,
    generic_fraction,
    main_terms,
    union_bounds,
)
from app.estimator.report import (
    BoundFlags,
    BoundReport,
    CostBound,
    EtaEntry,
    analyze,
    analyze_profile,
)

__all__ = [
    "COST_KINDS",
    "CostWindow",
    "MainTerms",
    "avgdeg_bounds",
    "avgdeg_eta_upper",
    "coprime_bounds",
    "cost_bounds",
    "cost_precondition",
    "generic_count_lower",
    "generic_fraction",
    "main_terms",
    "union_bounds",
    "BoundFlags",
    "BoundReport",
    "CostBound",
    "EtaEntry",
    "analyze",
    "analyze_profile",
]
