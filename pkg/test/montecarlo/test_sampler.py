"""Tests for seeded Monte-Carlo estimation"""

from fractions import Fraction

import pytest

from app.field import ff_make
from app.montecarlo import binomial_sanity, monte_carlo, sample_points
from app.polyring import Poly
from app.settings import reset_settings
from app.splitmix import splitmix64
from helpers import assert_exact


@pytest.fixture
def three_roots():
    return Poly.from_roots(ff_make(7), [1, 2, 3])


class TestSamplePoints:
    def test_shape_and_values(self):
        points = sample_points(99, 4, 3, 67, 2)
        assert points.shape == (3, 2)
        assert int(points[0][0]) == splitmix64(99, 8) % 67
        assert int(points[2][1]) == splitmix64(99, 13) % 67


class TestMonteCarlo:
    def test_same_seed_same_estimate(self, three_roots):
        first = monte_carlo(three_roots, 2, n=500, seed=3)
        second = monte_carlo(three_roots, 2, n=500, seed=3)
        assert first.mu == second.mu
        assert first.beta == second.beta
        assert first.gamma == second.gamma

    def test_chunking_does_not_change_draws(self, three_roots, monkeypatch):
        baseline = monte_carlo(three_roots, 2, n=300, seed=11)
        monkeypatch.setenv("EUCLAB_CHUNK_SIZE", "7")
        reset_settings()
        chunked = monte_carlo(three_roots, 2, n=300, seed=11)
        assert chunked.mu == baseline.mu
        assert chunked.E_t == baseline.E_t

    def test_report_fields(self, three_roots):
        report = monte_carlo(three_roots, 2, n=200, seed=5)
        assert report.mode == "sample"
        assert report.n == 200
        assert_exact(report.E_g, Fraction(3, 7))
        assert_exact(report.P0, Fraction(4, 7))
        assert 0 <= report.beta.value <= 1
        assert len(report.table_row(3)) == 9

    def test_defaults_from_settings(self, three_roots, monkeypatch):
        monkeypatch.setenv("EUCLAB_SAMPLES", "40")
        monkeypatch.setenv("EUCLAB_SEED", "9")
        reset_settings()
        report = monte_carlo(three_roots, 2)
        assert report.n == 40
        assert report.seed == 9

    def test_enumeration_equals_census(self, cube_f3):
        report = monte_carlo(cube_f3, 2, enumeration=True)
        assert report.mode == "enumeration"
        assert report.n == 9
        assert_exact(report.mu, Fraction(4, 9))
        assert_exact(report.beta, Fraction(2, 3))
        assert_exact(report.gamma, Fraction(4, 9))

    def test_rejects_bad_sample_size(self, three_roots):
        with pytest.raises(ValueError):
            monte_carlo(three_roots, 2, n=0)

    def test_eps1_undefined_when_main_term_vanishes(self):
        g = Poly.from_coeffs(ff_make(3), [1, 2, 0, 1])
        report = monte_carlo(g, 2, n=50, seed=1)
        assert report.k_exceeds_d
        assert report.eps1_rel is None
        row = report.table_row(0)
        assert row[7] is None

    def test_eps2_undefined_when_coprime_probability_vanishes(self):
        # T^3 - T has every element of F_3 as a root, so the main term P0 is zero
        g = Poly.from_coeffs(ff_make(3), [0, 2, 0, 1])
        report = monte_carlo(g, 2, n=50, seed=1)
        assert_exact(report.P0, Fraction(0))
        assert report.eps2 is None
        assert report.table_row(0)[8] is None


class TestBinomialSanity:
    def test_uses_census_when_small(self, three_roots):
        report = binomial_sanity(three_roots, 2, 100, seeds=[1, 2, 3, 4])
        assert report.p0_source == "census"
        assert len(report.betas) == 4
        p0 = report.p0.as_fraction()
        assert report.theoretical_std == pytest.approx(float(p0 * (1 - p0) / 100) ** 0.5)

    def test_falls_back_to_main_term(self, three_roots, monkeypatch):
        monkeypatch.setenv("EUCLAB_CAP", "10")
        reset_settings()
        report = binomial_sanity(three_roots, 2, 50, seeds=[1, 2])
        assert report.p0_source == "main_term"
        assert_exact(report.p0, Fraction(4, 7))

    def test_needs_two_seeds(self, three_roots):
        with pytest.raises(ValueError):
            binomial_sanity(three_roots, 2, 50, seeds=[1])
