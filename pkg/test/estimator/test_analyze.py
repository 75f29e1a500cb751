"""Tests for BoundReport assembly"""

from fractions import Fraction

import pytest

from app.estimator import analyze
from app.field import ff_make
from app.polyring import Poly
from helpers import assert_exact, assert_interval, poly


@pytest.fixture
def seven_roots():
    return Poly.from_roots(ff_make(67), list(range(1, 8)))


def test_analyze_seven_roots(seven_roots):
    report = analyze(seven_roots, 3)
    assert report.e == 7
    assert report.profile.k == 1
    assert_exact(report.main_E, Fraction(7, 67))
    assert_exact(report.main_P0, Fraction(60, 67))
    assert_interval(report.union_bounds, 30016, 31423)
    assert [entry.eta for entry in report.eta] == [7, 21, 35]
    assert [entry.binomial_bound for entry in report.eta] == [7, 21, 35]
    assert report.flags.preconditions_met
    assert report.flags.p0_exceeds_half


def test_union_center(seven_roots):
    assert analyze(seven_roots, 3).union_center() == 7 * 67**2


def test_cost_windows_in_report(seven_roots):
    window = analyze(seven_roots, 3).cost_bounds["div"]
    assert window.center == 4
    assert window.lemma.contains(4)


def test_k_exceeds_d_flag():
    report = analyze(poly(3, 1, 2, 0, 1), 2)
    assert report.flags.k_exceeds_d
    assert not report.flags.k_le_d
    assert_exact(report.main_P0, 1)
    assert report.eta == []


def test_csv_rows(seven_roots):
    header, rows = analyze(seven_roots, 3).csv_table()
    assert header == ["bound", "lower", "center", "upper"]
    assert [row[0] for row in rows] == [
        "union",
        "coprime",
        "avgdeg",
        "cost.div",
        "cost.fielddiv",
        "cost.addmul",
    ]


def test_rejects_d_not_below_e(cube_f3):
    with pytest.raises(ValueError):
        analyze(cube_f3, 3)
