"""Statistical and bound-grid suites"""

from app.census import check_census, exact_distribution
from app.estimator import analyze
from app.factorpat import build_with_pattern, parse_pattern_spec
from app.field import FieldCtx
from app.montecarlo import binomial_sanity
from app.verify.base import Draws, SuiteResult, VerificationSuite


class BoundsGridSuite(VerificationSuite):
    """Exact censuses inside every applicable estimator bound"""

    default_trials = 25

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="bounds-grid")
        draws = Draws(seed)
        for q in (3, 5, 7, 11):
            ctx = FieldCtx(q)
            for e in range(2, 7):
                for d in range(1, e):
                    for _ in range(trials):
                        g = draws.monic(ctx, e)
                        violations = check_census(analyze(g, d), exact_distribution(g, d))
                        result.check(
                            not violations, f"q={q} e={e} d={d} g={g}: {'; '.join(violations)}"
                        )
        return result

    def get_description(self) -> str:
        return "Censuses of random g inside every applicable bound (q <= 11, e <= 6)"


class BinomialSuite(VerificationSuite):
    """Spread of β across seeds against sqrt(P0(1 - P0)/n)"""

    default_trials = 100_000

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="binomial")
        draws = Draws(seed)
        ctx = FieldCtx(5)
        g = build_with_pattern(ctx, parse_pattern_spec("1^1x1,3^1x1"), seed)
        seeds = draws.values(2**32, 30)
        report = binomial_sanity(g, 2, trials, seeds)
        result.check(
            report.within_factor_two,
            f"g={g}: empirical std {report.empirical_std:.6f} "
            f"vs binomial {report.theoretical_std:.6f}",
        )
        return result

    def get_description(self) -> str:
        return "Std of β over 30 seeds of 10^5 draws within a factor 2 of the binomial value"
