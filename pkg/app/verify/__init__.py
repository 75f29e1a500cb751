from typing import Dict, List, Optional, Sequence

from app.verify.base import Draws, SuiteResult, VerificationSuite
from app.verify.algebra import (
    CauchySuite,
    FieldSuite,
    NewtonSuite,
    ResultantSuite,
    TColumnIdentitySuite,
)
from app.verify.structure import CharacterizationSuite, LeadStructureSuite, SchurRemainderSuite
from app.verify.statistics import BinomialSuite, BoundsGridSuite
from app.verify.report import VerifyReport, run_suites as _run_suites

DEFAULT_SUITE = "default"

# Registry of available suites
_SUITES: Dict[str, VerificationSuite] = {
    "field": FieldSuite(),
    "cauchy": CauchySuite(),
    "newton": NewtonSuite(),
    "lascoux": TColumnIdentitySuite(),
    "resultant": ResultantSuite(),
    "characterization": CharacterizationSuite(),
    "prop31": LeadStructureSuite(),
    "schur-remainder": SchurRemainderSuite(),
    "bounds-grid": BoundsGridSuite(),
    "binomial": BinomialSuite(),
}


def get_suite(name: str) -> VerificationSuite:
    """
    Get a verification suite by name

    Args:
        name: Suite name (field, cauchy, newton, lascoux, resultant, ...)

    Returns:
        VerificationSuite instance

    Raises:
        ValueError: If suite name is not found
    """
    suite_name = name.lower() if name else ""
    suite = _SUITES.get(suite_name)

    if suite is None:
        available = ", ".join(list(_SUITES.keys()) + [DEFAULT_SUITE])
        raise ValueError(f"Unknown suite '{name}'. Available suites: {available}")

    return suite


def register_suite(name: str, suite: VerificationSuite) -> None:
    """Register a custom suite"""
    _SUITES[name.lower()] = suite


def list_suites() -> list[str]:
    """Get a list of available suite names"""
    return list(_SUITES.keys())


def list_suites_with_descriptions() -> dict[str, str]:
    """Map suite names to their descriptions"""
    described = {name: suite.get_description() for name, suite in _SUITES.items()}
    described[DEFAULT_SUITE] = "Every suite at its default size"
    return described


def expand_suites(names: Optional[Sequence[str]]) -> List[str]:
    """Resolve suite names, expanding 'default' to every registered suite"""
    if not names:
        return list_suites()
    resolved: List[str] = []
    for name in names:
        if name.lower() == DEFAULT_SUITE:
            candidates = list_suites()
        else:
            get_suite(name)
            candidates = [name.lower()]
        resolved.extend(c for c in candidates if c not in resolved)
    return resolved


def run_suites(
    names: Optional[Sequence[str]], seed: int, trials: Optional[int] = None
) -> VerifyReport:
    """Run the named suites ('default' or none means all)"""
    return _run_suites(_SUITES, expand_suites(names), seed, trials)


__all__ = [
    "DEFAULT_SUITE",
    "Draws",
    "SuiteResult",
    "VerificationSuite",
    "VerifyReport",
    "CauchySuite",
    "FieldSuite",
    "TColumnIdentitySuite",
    "NewtonSuite",
    "ResultantSuite",
    "CharacterizationSuite",
    "LeadStructureSuite",
    "SchurRemainderSuite",
    "BinomialSuite",
    "BoundsGridSuite",
    "get_suite",
    "register_suite",
    "list_suites",
    "list_suites_with_descriptions",
    "expand_suites",
    "run_suites",
]
