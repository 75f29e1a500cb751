"""Tests for the exhaustive census"""

from fractions import Fraction

import pytest

from app.census import (
    CensusAccumulator,
    exact_distribution,
    index_to_coeffs,
    index_to_point,
)
from app.exceptions import EnumerationTooLarge
from helpers import assert_exact, poly


class TestIndexing:
    def test_first_coefficient_varies_fastest(self):
        assert index_to_coeffs(0, 3, 2) == [0, 0, 1]
        assert index_to_coeffs(1, 3, 2) == [0, 1, 1]
        assert index_to_coeffs(3, 3, 2) == [1, 0, 1]

    def test_point_matches_coeffs(self):
        for idx in range(25):
            coeffs = index_to_coeffs(idx, 5, 2)
            assert index_to_point(idx, 5, 2) == [coeffs[1], coeffs[0]]


class TestCubeOverF3:
    """g = T^3, d = 2: nine monic quadratics"""

    @pytest.fixture
    def report(self, cube_f3):
        return exact_distribution(cube_f3, 2)

    def test_gcd_degree_distribution(self, report):
        assert report.total == 9
        assert report.B == [6, 2, 1]
        assert report.union_from == [3, 1]

    def test_moments(self, report):
        assert_exact(report.E_X, Fraction(4, 9))
        assert_exact(report.P0, Fraction(2, 3))

    def test_generic_count(self, report):
        assert report.generic_count == 4
        assert_exact(report.P_generic, Fraction(4, 9))

    def test_csv_rows(self, report):
        header, rows = report.csv_table()
        assert header == ["i", "B_i", "union_from_i"]
        assert rows == [[0, 6, 9], [1, 2, 3], [2, 1, 1]]

    def test_not_cross_checked_by_default(self, report):
        assert report.bound_violations is None


def test_irreducible_quadratic_is_always_coprime():
    report = exact_distribution(poly(3, 1, 0, 1), 1)
    assert report.B == [3, 0]
    assert report.generic_count == 3


def test_cap_enforced(cube_f3):
    with pytest.raises(EnumerationTooLarge) as info:
        exact_distribution(cube_f3, 2, cap=5)
    assert info.value.exit_code == 3


def test_cap_from_settings(cube_f3, monkeypatch):
    from app.settings import reset_settings

    monkeypatch.setenv("EUCLAB_CAP", "8")
    reset_settings()
    with pytest.raises(EnumerationTooLarge):
        exact_distribution(cube_f3, 2)


def test_rejects_d_not_below_e(cube_f3):
    with pytest.raises(ValueError):
        exact_distribution(cube_f3, 3)


def test_accumulator_merge():
    left = CensusAccumulator(2)
    right = CensusAccumulator(2)
    left.add([0, 0, 0, 1], [0, 0, 1], 3)
    right.add([0, 0, 0, 1], [1, 0, 1], 3)
    left.merge(right)
    assert left.count == 2
    assert left.B == [1, 0, 1]
    with pytest.raises(ValueError):
        left.merge(CensusAccumulator(3))
