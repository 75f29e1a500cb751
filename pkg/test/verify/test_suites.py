"""Tests for the verification suites at reduced sizes"""

import pytest

from app.verify import get_suite


@pytest.mark.parametrize(
    "name,trials",
    [
        ("field", 20),
        ("cauchy", 20),
        ("newton", 20),
        ("lascoux", 10),
        ("resultant", 20),
        ("schur-remainder", 20),
        ("characterization", 1),
    ],
)
def test_suite_passes(name, trials):
    result = get_suite(name).run(trials, seed=7)
    assert result.name == name
    assert result.checked > 0
    assert result.passed, result.messages


@pytest.mark.slow
def test_generic_lead_degrees():
    result = get_suite("prop31").run(1, seed=7)
    assert result.passed, result.messages


@pytest.mark.slow
def test_bounds_grid():
    suite = get_suite("bounds-grid")
    assert suite.default_trials == 25
    result = suite.run(suite.default_trials, seed=7)
    assert result.failures == 0, result.messages
    assert result.checked == 25 * sum(e - 1 for e in range(2, 7)) * 4


def test_binomial_spread():
    result = get_suite("binomial").run(200, seed=7)
    assert result.checked == 1
    assert result.passed, result.messages


@pytest.mark.slow
def test_binomial_spread_at_default_size():
    suite = get_suite("binomial")
    assert suite.default_trials == 100_000
    result = suite.run(suite.default_trials, seed=7)
    assert result.passed, result.messages
