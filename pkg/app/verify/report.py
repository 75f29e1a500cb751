"""Running suites and summarising their results"""

from typing import Dict, List, Optional, Sequence

from app.experiment.report import Report
from app.logger import get_logger
from app.verify.base import SuiteResult, VerificationSuite

logger = get_logger("verify")


class VerifyReport(Report):
    """Per-suite counts of one verification run"""

    kind: str = "verify"
    seed: int
    suites: List[SuiteResult]
    total_checks: int
    total_failures: int
    passed: bool

    def csv_table(self):
        header = ["suite", "checked", "failures", "passed"]
        rows = [[s.name, s.checked, s.failures, s.passed] for s in self.suites]
        return header, rows


def run_suites(
    suites: Dict[str, VerificationSuite],
    names: Sequence[str],
    seed: int,
    trials: Optional[int] = None,
) -> VerifyReport:
    """Run the named suites in order, each with its own default trial count unless given"""
    results: List[SuiteResult] = []
    for name in names:
        suite = suites[name]
        count = trials if trials is not None else suite.default_trials
        logger.info("Suite started", suite=name, trials=count, seed=seed)
        result = suite.run(count, seed)
        logger.info(
            "Suite completed", suite=name, checked=result.checked, failures=result.failures
        )
        for message in result.messages:
            logger.warning("Suite failure", suite=name, detail=message)
        results.append(result)

    failures = sum(r.failures for r in results)
    return VerifyReport(
        seed=seed,
        suites=results,
        total_checks=sum(r.checked for r in results),
        total_failures=failures,
        passed=failures == 0,
    )
