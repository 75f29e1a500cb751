"""Tests for Euclid remainders in Schur form"""

from itertools import combinations_with_replacement

import pytest

from app.exceptions import IndexOutOfRange
from app.field import ff_make
from app.polyring import Poly, euclid_trace
from app.symschur import (
    Alphabet,
    closed_form_sign,
    euclid_normalization,
    lead_vanishing_agrees,
    remainder_via_schur,
    schur_remainder,
)
from helpers import assert_poly


def test_first_remainder_is_g_at_root(f5):
    a = Alphabet.of(f5, [1, 2])
    b = Alphabet.of(f5, [4])
    rem = schur_remainder(1, a, b)
    assert rem.sign == 1
    assert rem.matches_closed_form
    assert_poly(rem.poly, [1])


@pytest.mark.parametrize("k", [1, 2])
def test_degree_drop_and_normalization(k):
    ctx = ff_make(11)
    a = Alphabet.of(ctx, [1, 2, 3, 4])
    b = Alphabet.of(ctx, [5, 7])
    rem = schur_remainder(k, a, b)
    assert rem.poly.degree <= 2 - k

    g = Poly.from_roots(ctx, a.elements)
    f = Poly.from_roots(ctx, b.elements)
    nu = euclid_normalization(rem.poly, g, f, k)
    assert nu in (None, 1, 10)
    if k == 1:
        assert rem.matches_closed_form
        assert nu == 10


def test_remainder_via_schur_agrees_with_chain():
    ctx = ff_make(13)
    a = Alphabet.of(ctx, [2, 3, 5])
    b = Alphabet.of(ctx, [7, 11])
    g = Poly.from_roots(ctx, a.elements)
    f = Poly.from_roots(ctx, b.elements)
    trace = euclid_trace(g, f)
    rem = remainder_via_schur(1, a, b)
    assert rem.monic() == trace.remainders[0].monic()


def test_closed_form_sign():
    assert closed_form_sign(2, 1, 1) == 1
    assert closed_form_sign(3, 1, 1) == -1
    assert closed_form_sign(4, 2, 2) == 1
    assert closed_form_sign(5, 3, 3) == -1


def test_sizes_checked(f5):
    a = Alphabet.of(f5, [1, 2])
    with pytest.raises(IndexOutOfRange):
        schur_remainder(2, a, Alphabet.of(f5, [3]))
    with pytest.raises(IndexOutOfRange):
        schur_remainder(1, a, Alphabet.of(f5, [3, 4]))


def test_lead_vanishing_matches_euclid_on_full_enumeration(f5):
    # every g = S^4(T - A) and f = S^2(T - B) with A, B multisets over F_5
    compared = drops = 0
    for a_values in combinations_with_replacement(range(5), 4):
        a = Alphabet.of(f5, a_values)
        g = Poly.from_roots(f5, a.elements)
        for b_values in combinations_with_replacement(range(5), 2):
            b = Alphabet.of(f5, b_values)
            f = Poly.from_roots(f5, b.elements)
            for k in (1, 2):
                rem = schur_remainder(k, a, b)
                agrees = lead_vanishing_agrees(rem.poly, g, f, k)
                if agrees is None:
                    continue
                compared += 1
                drops += rem.poly.coeff(2 - k) == 0
                assert agrees, f"A={a_values} B={b_values} k={k}"
    assert compared > 70 * 15
    assert drops > 0


def test_lead_vanishing_skips_non_generic_history(f5):
    # f divides g = T^4 - 1, so r_1 = 0 and step 2 has no generic history
    a = Alphabet.of(f5, [1, 2, 3, 4])
    b = Alphabet.of(f5, [1, 2])
    g = Poly.from_roots(f5, a.elements)
    f = Poly.from_roots(f5, b.elements)
    first = schur_remainder(1, a, b).poly
    assert first.coeff(1) == 0
    assert lead_vanishing_agrees(first, g, f, 1) is True
    assert lead_vanishing_agrees(schur_remainder(2, a, b).poly, g, f, 2) is None
