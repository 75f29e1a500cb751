"""Full-size runs of the q=67 configuration

These take minutes; run them with `pytest -m slow`.
"""

from fractions import Fraction

import pytest

from app.census import check_census, exact_distribution
from app.estimator import analyze
from app.factorpat import build_with_pattern, parse_pattern_spec
from app.field import ff_make
from app.polyring import Poly
from app.tables import get_table, run_table

from helpers import assert_within

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def seven_roots():
    return Poly.from_roots(ff_make(67), list(range(1, 8)))


def test_full_census_inside_bounds(seven_roots):
    census = exact_distribution(seven_roots, 3)
    assert census.total == 67**3
    # inclusion-exclusion over seven distinct roots
    assert census.union_from[0] == 7 * 67**2 - 21 * 67 + 35
    assert census.P0.as_fraction() == 1 - Fraction(census.union_from[0], 67**3)
    # deg gcd counts the roots of g that f shares, each with probability 1/q
    assert census.E_X.as_fraction() == Fraction(7, 67)
    assert check_census(analyze(seven_roots, 3), census) == []


@pytest.mark.parametrize(
    "pattern,k,expected_E",
    [
        # one rational root beside an irreducible sextic
        ("1^1x1,6^1x1", 1, Fraction(1, 67)),
        # no roots; only the irreducible quadratic fits inside a cubic f
        ("2^1x1,5^1x1", 2, Fraction(2, 67**2)),
    ],
)
def test_pattern_census_inside_bounds(pattern, k, expected_E):
    g = build_with_pattern(ff_make(67), parse_pattern_spec(pattern), seed=20240101)
    assert g.degree == 7
    report = analyze(g, 3)
    assert report.profile.k == k
    census = exact_distribution(g, 3)
    assert census.total == 67**3
    assert census.E_X.as_fraction() == expected_E
    assert report.main_E.as_fraction() == expected_E
    assert check_census(report, census) == []


def test_table1_matches_main_terms():
    report = run_table(get_table("table1"), n=300000, seed=20240101)
    assert len(report.rows) == 7
    for row in report.rows:
        assert_within(row.mu.as_fraction(), row.E_g.as_fraction(), Fraction(1, 100))
        assert_within(row.beta.as_fraction(), row.P0.as_fraction(), Fraction(5, 1000))
        assert row.gamma.value >= row.PG.value
