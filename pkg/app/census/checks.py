"""Cross-check an exact census against the closed-form bounds"""

from fractions import Fraction
from typing import List

from app.estimator import BoundReport
from app.experiment.report import ExactValue, Interval
from app.census.distribution import CensusReport


def _outside(name: str, value: Fraction, interval: Interval) -> str:
    return f"{name}: {value} outside [{interval.lower.exact}, {interval.upper.exact}]"


def _above(name: str, value: Fraction, bound: ExactValue) -> str:
    return f"{name}: {value} exceeds {bound.exact}"


def check_census(bounds: BoundReport, census: CensusReport) -> List[str]:
    """
    List every bound the census violates; empty when all hold

    Two-sided cost windows are only checked when q > d(2e-d+1)/2.
    """
    if (bounds.q, bounds.e, bounds.d) != (census.q, census.e, census.d):
        raise ValueError("Bounds and census describe different configurations")

    violations: List[str] = []
    flags = bounds.flags
    e_x = census.E_X.as_fraction()
    p0 = census.P0.as_fraction()

    if flags.k_exceeds_d:
        if census.union_from and census.union_from[0] != 0:
            violations.append(f"union: {census.union_from[0]} but no factor of degree <= d")
        if p0 != 1:
            violations.append(f"coprime: P0={p0} but no factor of degree <= d")
    else:
        for i in range(1, min(bounds.profile.k, bounds.d) + 1):
            size = census.union_from[i - 1]
            if not bounds.union_bounds.contains(size):
                violations.append(_outside(f"union_from[{i}]", Fraction(size), bounds.union_bounds))
        if not bounds.coprime_bounds.contains(p0):
            violations.append(_outside("coprime", p0, bounds.coprime_bounds))
        if not bounds.avgdeg_bounds.contains(e_x):
            violations.append(_outside("avgdeg", e_x, bounds.avgdeg_bounds))
        if e_x > bounds.avgdeg_eta_upper.as_fraction():
            violations.append(_above("avgdeg_eta_upper", e_x, bounds.avgdeg_eta_upper))

    if e_x > bounds.avgdeg_simple_upper.as_fraction():
        violations.append(_above("avgdeg_simple_upper", e_x, bounds.avgdeg_simple_upper))

    for kind, window in bounds.cost_bounds.items():
        mean = census.E_t[kind].as_fraction()
        if not window.lemma.contains(mean):
            violations.append(_outside(f"cost.{kind}.lemma", mean, window.lemma))
        if flags.q_gt_cost_threshold and not window.symmetric.contains(mean):
            violations.append(_outside(f"cost.{kind}.symmetric", mean, window.symmetric))

    if census.generic_count < bounds.generic_lower.as_fraction():
        violations.append(
            f"generic_count: {census.generic_count} below {bounds.generic_lower.exact}"
        )
    if census.generic_count > census.B[0]:
        violations.append(f"generic_count: {census.generic_count} exceeds |B_0|={census.B[0]}")
    return violations
