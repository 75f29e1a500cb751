"""Tests for the instrumented Euclidean trace"""

import itertools

import pytest

from app.exceptions import DegreeOrder
from app.polyring import euclid_trace, is_generic, replay_trace
from helpers import assert_poly, poly


class TestEuclidTrace:
    def test_generic_chain_over_f3(self, cube_f3):
        trace = euclid_trace(cube_f3, poly(3, 1, 0, 1))
        assert trace.h == 2
        assert_poly(trace.remainders[0], [0, 2])
        assert_poly(trace.remainders[1], [1])
        assert_poly(trace.gcd, [1])
        assert (trace.t_polydiv, trace.t_fielddiv, trace.t_addmul) == (3, 6, 6)
        assert trace.is_generic

    def test_f_divides_g(self, cube_f3):
        trace = euclid_trace(cube_f3, poly(3, 0, 0, 1))
        assert trace.h == 0
        assert trace.degree_sequence == ()
        assert_poly(trace.gcd, [0, 0, 1])
        assert trace.t_polydiv == 1
        assert trace.t_fielddiv == 2

    def test_chain_stopping_early(self, cube_f3):
        trace = euclid_trace(cube_f3, poly(3, 0, 1, 1))
        assert trace.h == 1
        assert_poly(trace.remainders[0], [0, 1])
        assert_poly(trace.gcd, [0, 1])
        assert trace.gcd_degree == 1
        assert trace.t_polydiv == 2
        assert not trace.is_generic

    def test_polydiv_is_chain_length_plus_one(self):
        g = poly(67, 5, 1, 0, 3, 0, 0, 2, 1)
        for f in [poly(67, 1, 2, 3, 1), poly(67, 60, 1), poly(67, 0, 0, 0, 1)]:
            trace = euclid_trace(g, f)
            assert trace.t_polydiv == trace.h + 1

    def test_degree_sequence_strictly_decreasing(self):
        g = poly(67, 5, 1, 0, 3, 0, 0, 2, 1)
        trace = euclid_trace(g, poly(67, 4, 9, 1, 1))
        sequence = trace.degree_sequence
        assert all(a > b for a, b in zip(sequence, sequence[1:]))
        assert all(deg < 3 for deg in sequence)

    def test_gcd_divides_both(self):
        g = poly(5, 4, 0, 1) * poly(5, 2, 0, 0, 1)
        f = poly(5, 4, 0, 1) * poly(5, 1, 1)
        trace = euclid_trace(g, f)
        assert trace.gcd.is_monic
        assert trace.gcd.divides(g)
        assert trace.gcd.divides(f)
        assert_poly(trace.gcd, [4, 0, 1])

    @pytest.mark.parametrize(
        "g,f",
        [
            (poly(3, 0, 1, 1), poly(3, 0, 0, 1)),
            (poly(3, 0, 0, 1), poly(3, 1)),
            (poly(3, 0, 0, 1), poly(3, 0, 0, 2)),
        ],
    )
    def test_degree_order_enforced(self, g, f):
        with pytest.raises(DegreeOrder):
            euclid_trace(g, f)

    def test_report_carries_counters(self, cube_f3):
        report = euclid_trace(cube_f3, poly(3, 1, 0, 1)).to_report()
        assert report.kind == "trace"
        assert report.remainders == ["0,2", "1"]
        assert report.degree_sequence == [1, 0]
        assert report.generic is True
        assert (report.t_polydiv, report.t_fielddiv, report.t_addmul) == (3, 6, 6)

    def test_replay_rebuilds_inputs(self):
        g = poly(67, 5, 1, 0, 3, 0, 0, 2, 1)
        f = poly(67, 4, 9, 1, 1)
        trace = euclid_trace(g, f)
        assert replay_trace(trace) == (g, f)

    def test_replay_when_f_divides_g(self, cube_f3):
        f = poly(3, 0, 0, 1)
        assert replay_trace(euclid_trace(cube_f3, f)) == (cube_f3, f)


class TestIsGeneric:
    def test_known_cases(self, cube_f3):
        assert is_generic(cube_f3, poly(3, 1, 0, 1))
        assert not is_generic(cube_f3, poly(3, 0, 1, 1))

    def test_exactly_four_generic_quadratics_over_f3(self, cube_f3):
        count = sum(
            is_generic(cube_f3, poly(3, b, a, 1)) for a, b in itertools.product(range(3), repeat=2)
        )
        assert count == 4

    def test_rejects_bad_degrees(self, cube_f3):
        with pytest.raises(DegreeOrder):
            is_generic(cube_f3, poly(3, 1))
