"""BoundReport: every estimator for one (q, e, d, g) configuration"""

from typing import Dict, List

from pydantic import BaseModel

from app.experiment.report import ExactValue, Interval, Report
from app.factorpat import FactorProfile, divisor_count_eta, eta_bounds, profile
from app.logger import get_logger
from app.polyring import Poly, poly_format
from app.estimator.bounds import (
    avgdeg_bounds,
    avgdeg_eta_upper,
    coprime_bounds,
    cost_bounds,
    cost_precondition,
    generic_count_lower,
    main_terms,
    union_bounds,
)

logger = get_logger("estimator")


class CostBound(BaseModel):
    """Symmetric and lemma windows around one cost center"""

    center: int
    symmetric: Interval
    lemma: Interval


class EtaEntry(BaseModel):
    """Exact divisor count η_i with its two closed-form upper bounds"""

    i: int
    eta: int
    binomial_bound: int
    power_bound: int


class BoundFlags(BaseModel):
    """Preconditions and validity of the reported bounds"""

    k_le_d: bool
    k_exceeds_d: bool
    q_gt_cost_threshold: bool
    p0_exceeds_half: bool
    coprime_bounds_in_unit_interval: bool
    avgdeg_lower_nonnegative: bool

    @property
    def preconditions_met(self) -> bool:
        return self.k_le_d and self.q_gt_cost_threshold


class BoundReport(Report):
    """Closed-form estimators and bounds for (q, e, d, g)"""

    kind: str = "bounds"
    q: int
    e: int
    d: int
    g: str
    profile: FactorProfile
    main_E: ExactValue
    main_P0: ExactValue
    main_PG: ExactValue
    union_bounds: Interval
    union_from: List[Interval]
    coprime_bounds: Interval
    avgdeg_bounds: Interval
    avgdeg_simple_upper: ExactValue
    avgdeg_eta_upper: ExactValue
    eta: List[EtaEntry]
    cost_bounds: Dict[str, CostBound]
    generic_lower: ExactValue
    flags: BoundFlags

    def csv_table(self):
        header = ["bound", "lower", "center", "upper"]
        rows = [
            [
                "union",
                self.union_bounds.lower.value,
                self.union_center(),
                self.union_bounds.upper.value,
            ],
            [
                "coprime",
                self.coprime_bounds.lower.value,
                self.main_P0.value,
                self.coprime_bounds.upper.value,
            ],
            [
                "avgdeg",
                self.avgdeg_bounds.lower.value,
                self.main_E.value,
                self.avgdeg_bounds.upper.value,
            ],
        ]
        for kind, window in self.cost_bounds.items():
            rows.append(
                [f"cost.{kind}", window.lemma.lower.value, window.center, window.lemma.upper.value]
            )
        return header, rows

    def union_center(self) -> int:
        k = self.profile.k
        if k > self.d:
            return 0
        return self.profile.lam_star(k) * self.q ** (self.d - k)


def analyze_profile(prof: FactorProfile, d: int, g_text: str = "") -> BoundReport:
    """Evaluate every estimator from a precomputed profile"""
    q, e = prof.q, prof.degree
    if not 1 <= d < e:
        raise ValueError(f"Estimators need 1 <= d < e, got d={d}, e={e}")

    terms = main_terms(q, e, d, prof)
    u_lower, u_upper = union_bounds(q, d, prof)
    c_lower, c_upper = coprime_bounds(q, d, prof)
    a_lower, a_upper, a_simple = avgdeg_bounds(q, e, d, prof)
    union = Interval.of(u_lower, u_upper)

    eta: List[EtaEntry] = []
    for i in range(prof.k, d + 1):
        binomial, power = eta_bounds(prof.lambda_, prof.k, i)
        eta.append(
            EtaEntry(
                i=i, eta=divisor_count_eta(prof, i), binomial_bound=binomial, power_bound=power
            )
        )

    costs = {
        kind: CostBound(
            center=window.center,
            symmetric=Interval.of(window.sym_lower, window.sym_upper),
            lemma=Interval.of(window.lemma_lower, window.lemma_upper),
        )
        for kind, window in cost_bounds(q, e, d).items()
    }

    return BoundReport(
        q=q,
        e=e,
        d=d,
        g=g_text,
        profile=prof,
        main_E=ExactValue.of(terms.E_g),
        main_P0=ExactValue.of(terms.P0),
        main_PG=ExactValue.of(terms.PG),
        union_bounds=union,
        union_from=[union] * min(prof.k, d),
        coprime_bounds=Interval.of(c_lower, c_upper),
        avgdeg_bounds=Interval.of(a_lower, a_upper),
        avgdeg_simple_upper=ExactValue.of(a_simple),
        avgdeg_eta_upper=ExactValue.of(avgdeg_eta_upper(q, d, prof)),
        eta=eta,
        cost_bounds=costs,
        generic_lower=ExactValue.of(generic_count_lower(q, e, d)),
        flags=BoundFlags(
            k_le_d=not terms.k_exceeds_d,
            k_exceeds_d=terms.k_exceeds_d,
            q_gt_cost_threshold=cost_precondition(q, e, d),
            p0_exceeds_half=q > 2 * e,
            coprime_bounds_in_unit_interval=0 <= c_lower and c_upper <= 1,
            avgdeg_lower_nonnegative=a_lower >= 0,
        ),
    )


def analyze(g: Poly, d: int) -> BoundReport:
    """
    Profile g and evaluate every estimator for monic f of degree d

    Args:
        g: Fixed polynomial of degree e > d
        d: Degree of the random monic f

    Returns:
        BoundReport with exact values and rounded floats
    """
    prof = profile(g)
    logger.debug("Analyzing", q=g.ctx.q, e=prof.degree, d=d, k=prof.k)
    return analyze_profile(prof, d, poly_format(g))
