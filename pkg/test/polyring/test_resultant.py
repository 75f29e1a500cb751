"""Tests for the two resultant implementations"""

import pytest

from app.exceptions import ZeroInput
from app.field import ff_make
from app.polyring import Poly, resultant_euclid, resultant_sylvester, sylvester_matrix
from app.splitmix import SplitMixStream
from helpers import poly


@pytest.mark.parametrize(
    "g,f,expected",
    [
        (poly(3, 0, 0, 0, 1), poly(3, 1, 0, 1), 1),
        (poly(5, 4, 0, 1), poly(5, 4, 1), 0),
        (poly(5, 3, 1), poly(5, 2, 1), 4),
    ],
)
def test_known_resultants(g, f, expected):
    assert int(resultant_euclid(g, f)) == expected
    assert int(resultant_sylvester(g, f)) == expected


def test_constant_argument():
    g = poly(7, 1, 2, 3, 1)
    c = poly(7, 3)
    assert int(resultant_euclid(g, c)) == pow(3, 3, 7)
    assert int(resultant_sylvester(g, c)) == pow(3, 3, 7)


def test_zero_input_rejected(f5):
    with pytest.raises(ZeroInput):
        resultant_euclid(poly(5, 1, 1), Poly.zero(f5))
    with pytest.raises(ZeroInput):
        resultant_sylvester(Poly.zero(f5), poly(5, 1, 1))


def test_sylvester_matrix_shape():
    matrix = sylvester_matrix(poly(7, 1, 2, 3, 1), poly(7, 5, 1))
    assert len(matrix) == 4
    assert all(len(row) == 4 for row in matrix)
    assert matrix[0] == [1, 3, 2, 1]
    assert matrix[1] == [1, 5, 0, 0]


def test_methods_agree_on_random_pairs():
    ctx = ff_make(7)
    stream = SplitMixStream(99)
    for _ in range(50):
        g = Poly.from_coeffs(ctx, list(stream.residues(7, 4)) + [1 + stream.next_u64() % 6])
        f = Poly.from_coeffs(ctx, list(stream.residues(7, 3)) + [1 + stream.next_u64() % 6])
        assert resultant_euclid(g, f) == resultant_sylvester(g, f)


def test_resultant_vanishes_iff_common_factor():
    ctx = ff_make(5)
    g = Poly.from_roots(ctx, [1, 2, 3])
    for root in range(5):
        f = Poly.from_roots(ctx, [root, 4])
        shared = root in (1, 2, 3)
        assert (int(resultant_euclid(g, f)) == 0) == shared
