"""Tests for the closed-form estimators and bounds"""

from fractions import Fraction

import pytest

from app.estimator import (
    avgdeg_bounds,
    avgdeg_eta_upper,
    coprime_bounds,
    cost_bounds,
    cost_precondition,
    generic_count_lower,
    generic_fraction,
    main_terms,
    union_bounds,
)
from app.factorpat import profile
from app.field import ff_make
from app.polyring import Poly
from helpers import profile_for

SEVEN_ROOTS = profile_for(67, 7, 1, 7)


class TestMainTerms:
    def test_seven_linear_factors(self):
        terms = main_terms(67, 7, 3, SEVEN_ROOTS)
        assert terms.E_g == Fraction(7, 67)
        assert terms.P0 == Fraction(60, 67)
        assert terms.PG == Fraction(49, 67)
        assert not terms.k_exceeds_d

    def test_quadratic_factors(self):
        terms = main_terms(5, 4, 3, profile_for(5, 4, 2, 2))
        assert terms.E_g == Fraction(4, 25)
        assert terms.P0 == Fraction(23, 25)

    def test_k_exceeds_d_is_degenerate(self):
        terms = main_terms(3, 3, 2, profile_for(3, 3, 3, 1))
        assert terms.k_exceeds_d
        assert terms.E_g == 0
        assert terms.P0 == 1

    def test_generic_fraction_large_field(self):
        assert round(float(generic_fraction(211, 17, 7)), 6) == 0.535545


class TestUnionBounds:
    def test_seven_roots(self):
        assert union_bounds(67, 3, SEVEN_ROOTS) == (30016, 31423)

    def test_higher_degree_factors_widen_upper(self):
        prof = profile_for(5, 6, 1, 2, extra={2: 1, 3: 1})
        lower, upper = union_bounds(5, 3, prof)
        assert lower == 2 * 25 - 1 * 5
        assert upper == 2 * 25 + 5 + 1

    def test_k_exceeds_d_is_empty(self):
        assert union_bounds(3, 2, profile_for(3, 3, 3, 1)) == (0, 0)


class TestCoprimeBounds:
    def test_seven_roots(self):
        lower, upper = coprime_bounds(67, 3, SEVEN_ROOTS)
        assert lower == Fraction(60, 67)
        assert upper == Fraction(60, 67) + Fraction(21, 67**2)

    def test_bounds_bracket_main_term(self):
        prof = profile_for(7, 5, 1, 3, extra={2: 1})
        lower, upper = coprime_bounds(7, 3, prof)
        assert lower <= main_terms(7, 5, 3, prof).P0 <= upper


class TestAvgdegBounds:
    def test_seven_roots(self):
        lower, upper, simple = avgdeg_bounds(67, 7, 3, SEVEN_ROOTS)
        center = Fraction(7, 67)
        assert lower == center - Fraction(21, 67**2)
        assert upper == center + Fraction(2 * 21, 67**2) + Fraction(3 * 35, 67**3)
        assert simple == Fraction(21, 67)

    def test_eta_upper_matches_gf_for_squarefree(self):
        prof = profile(Poly.from_roots(ff_make(67), range(1, 8)))
        _, upper, _ = avgdeg_bounds(67, 7, 3, prof)
        assert avgdeg_eta_upper(67, 3, prof) == upper


class TestCostBounds:
    def test_windows(self):
        windows = cost_bounds(67, 7, 3)
        div = windows["div"]
        assert div.center == 4
        assert div.lemma_lower == 4 * (1 - Fraction(36, 134))
        assert div.lemma_upper == 4 * (1 + Fraction(21, 67))
        assert div.sym_lower == 4 * (1 - Fraction(21, 67))
        assert windows["fielddiv"].center == 11
        assert windows["addmul"].center == 21

    @pytest.mark.parametrize("q,e,d,expected", [(67, 7, 3, True), (13, 7, 3, False)])
    def test_precondition(self, q, e, d, expected):
        assert cost_precondition(q, e, d) is expected

    def test_generic_count_lower(self):
        assert generic_count_lower(67, 7, 3) == 67**3 * Fraction(49, 67)
