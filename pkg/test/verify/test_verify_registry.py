"""Tests for suite lookup and verification reports"""

import pytest

import app.verify as verify
from app.verify import (
    DEFAULT_SUITE,
    SuiteResult,
    VerificationSuite,
    expand_suites,
    get_suite,
    list_suites,
    list_suites_with_descriptions,
    run_suites,
)


class FailingSuite(VerificationSuite):
    default_trials = 3

    def run(self, trials: int, seed: int) -> SuiteResult:
        result = SuiteResult(name="failing")
        for i in range(trials):
            result.check(i == 0, f"trial {i} failed")
        return result

    def get_description(self) -> str:
        return "Fails every trial after the first"


def test_suite_result_counts():
    result = SuiteResult(name="x")
    result.check(True, "fine")
    result.check(False, "broken")
    assert (result.checked, result.failures) == (2, 1)
    assert result.messages == ["broken"]
    assert not result.passed


def test_messages_are_capped():
    result = SuiteResult(name="x")
    for i in range(25):
        result.check(False, str(i))
    assert result.failures == 25
    assert len(result.messages) == 10


def test_unknown_suite():
    with pytest.raises(ValueError, match="Unknown suite 'nope'. Available suites:"):
        get_suite("nope")


def test_expand_default():
    assert expand_suites(None) == list_suites()
    assert expand_suites([DEFAULT_SUITE]) == list_suites()
    assert expand_suites(["Field", "field", "newton"]) == ["field", "newton"]
    with pytest.raises(ValueError):
        expand_suites(["field", "nope"])


def test_descriptions_include_default():
    described = list_suites_with_descriptions()
    assert DEFAULT_SUITE in described
    assert set(list_suites()) <= set(described)


def test_run_suites_report():
    report = run_suites(["field", "newton"], seed=3, trials=5)
    assert [s.name for s in report.suites] == ["field", "newton"]
    assert report.passed
    assert report.total_checks == sum(s.checked for s in report.suites)
    header, rows = report.csv_table()
    assert header == ["suite", "checked", "failures", "passed"]
    assert rows[0][0] == "field"


def test_failing_suite_marks_report(monkeypatch):
    monkeypatch.setitem(verify._SUITES, "failing", FailingSuite())
    report = run_suites(["failing"], seed=1)
    assert not report.passed
    assert report.total_failures == 2
    assert report.suites[0].checked == 3
