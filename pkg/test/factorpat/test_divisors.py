"""Tests for divisor counts and their bounds"""

import pytest

from app.factorpat import divisor_count_eta, eta_bounds, gf_coefficient, profile
from helpers import poly


def test_eta_of_square_times_linear():
    prof = profile(poly(5, 4, 1) * poly(5, 4, 1) * poly(5, 3, 1))
    assert divisor_count_eta(prof, 2) == 2
    assert divisor_count_eta(prof, 3) == 1


def test_eta_of_three_distinct_roots():
    prof = profile(poly(5, 0, 1) * poly(5, 4, 1) * poly(5, 3, 1))
    assert [divisor_count_eta(prof, i) for i in range(4)] == [1, 3, 3, 1]


def test_eta_zero_is_one(cube_f3):
    assert divisor_count_eta(profile(cube_f3), 0) == 1


def test_eta_range_checked(cube_f3):
    with pytest.raises(ValueError):
        divisor_count_eta(profile(cube_f3), 4)


def test_eta_bounds():
    assert eta_bounds([3], 1, 2) == (3, 8)
    assert eta_bounds([0, 2], 2, 2) == (6, 4)
    binomial, power = eta_bounds([1], 1, 1)
    assert binomial >= 1 and power >= 1


def test_eta_bounds_require_k_le_i():
    with pytest.raises(ValueError):
        eta_bounds([0, 1], 2, 1)


def test_eta_within_bounds():
    q2 = poly(3, 1, 0, 1)
    prof = profile(poly(3, 0, 1) * poly(3, 1, 1) * q2 * q2)
    for i in range(1, prof.degree + 1):
        binomial, power = eta_bounds(prof.lambda_, prof.k, i)
        assert divisor_count_eta(prof, i) <= min(binomial, power)


def test_gf_coefficient():
    assert gf_coefficient([3], 1, 2) == 3
    assert gf_coefficient([1, 1], 1, 3) == 1
    assert gf_coefficient([0, 1], 2, 3) == 0
    assert gf_coefficient([2], 1, -1) == 0
