"""Exhaustive checks of the resultant and genericity characterizations

For every monic f of degree d:
  gcd(g, f) != 1  <=>  res(g, f) = 0
  f generic       <=>  G_k(s_1, ..., s_d) != 0 for every k <= d
"""

from typing import List, Optional

from app.exceptions import TooLarge
from app.experiment.report import Report
from app.genlead import GenericLeadSet, generic_lead
from app.logger import get_logger
from app.polyring import Poly, euclid_raw, poly_format, resultant_euclid_raw
from app.census.distribution import check_enumeration_size, index_to_coeffs, index_to_point

logger = get_logger("census")

MAX_COUNTEREXAMPLES = 10


class CharacterizationReport(Report):
    """Outcome of both equivalence checks with sample counterexamples"""

    kind: str = "characterization"
    q: int
    e: int
    d: int
    g: str
    checked: int
    resultant_flag: bool
    generic_flag: Optional[bool]
    resultant_counterexamples: List[List[int]]
    generic_counterexamples: List[List[int]]
    generic_skipped_reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.resultant_flag and self.generic_flag is not False


def verify_characterizations(
    g: Poly,
    d: int,
    cap: Optional[int] = None,
    lead_set: Optional[GenericLeadSet] = None,
) -> CharacterizationReport:
    """
    Check both characterizations on every monic f of degree d

    The genericity check is skipped (generic_flag None) when the generic
    leading coefficients are too large to build.

    Raises:
        EnumerationTooLarge: If q^d exceeds the cap
    """
    q = g.ctx.q
    e = len(g.coeffs) - 1
    total = check_enumeration_size(q, d, cap)

    skipped: Optional[str] = None
    if lead_set is None:
        try:
            lead_set = generic_lead(g.monic(), d)
        except TooLarge as error:
            skipped = error.message
            logger.warning("Genericity characterization skipped", reason=error.message)

    logger.info("Characterization check started", q=q, e=e, d=d, size=total)
    g_coeffs = list(g.coeffs)
    res_bad: List[List[int]] = []
    gen_bad: List[List[int]] = []
    res_ok = True
    gen_ok = True
    for idx in range(total):
        f_coeffs = index_to_coeffs(idx, q, d)
        raw = euclid_raw(g_coeffs, f_coeffs, q)
        shares_factor = len(raw.last) > 1
        vanishes = resultant_euclid_raw(g_coeffs, f_coeffs, q) == 0
        if shares_factor != vanishes:
            res_ok = False
            if len(res_bad) < MAX_COUNTEREXAMPLES:
                res_bad.append(f_coeffs)
        if lead_set is not None:
            generic = len(raw.degrees) == d
            if generic != lead_set.all_nonzero(index_to_point(idx, q, d)):
                gen_ok = False
                if len(gen_bad) < MAX_COUNTEREXAMPLES:
                    gen_bad.append(f_coeffs)

    report = CharacterizationReport(
        q=q,
        e=e,
        d=d,
        g=poly_format(g),
        checked=total,
        resultant_flag=res_ok,
        generic_flag=gen_ok if lead_set is not None else None,
        resultant_counterexamples=res_bad,
        generic_counterexamples=gen_bad,
        generic_skipped_reason=skipped,
    )
    logger.info(
        "Characterization check completed",
        resultant=report.resultant_flag,
        generic=report.generic_flag,
    )
    return report
