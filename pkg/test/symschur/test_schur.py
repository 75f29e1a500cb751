"""Tests for Schur determinants and the T-column form"""

import pytest

from app.symschur import (
    Alphabet,
    complete_series,
    lascoux_148_check,
    multi_schur_det,
    schur_det,
    schur_t_poly,
    t_column_minors,
)
from helpers import assert_poly


@pytest.fixture
def complete(f5):
    return complete_series(Alphabet.of(f5, [1, 2]), 6)


def test_single_row_is_complete_function(complete):
    assert schur_det((2,), complete, 5) == 2


def test_column_is_elementary_function(complete):
    assert schur_det((1, 1), complete, 5) == 2


def test_empty_index(complete):
    assert schur_det((), complete, 5) == 1


def test_negative_index_rejected(complete):
    with pytest.raises(ValueError):
        schur_det((1, -1), complete, 5)


def test_callable_entries(complete):
    assert schur_det((2, 1), lambda i: complete[i], 5) == schur_det((2, 1), complete, 5)


def test_multi_schur_with_equal_columns(complete):
    assert multi_schur_det((2, 1), [complete, complete], 5) == schur_det((2, 1), complete, 5)
    with pytest.raises(ValueError):
        multi_schur_det((2, 1), [complete], 5)


def test_t_column_of_one_row(f5, complete):
    assert t_column_minors((1,), complete, 5) == [4, 3]
    assert_poly(schur_t_poly((1,), complete, f5), [3, 4])
    assert_poly(schur_t_poly((1,), complete, f5, ell=2), [0, 0, 3, 4])


@pytest.mark.parametrize("index", [(1,), (2, 2), (1, 2), (3, 1, 0)])
@pytest.mark.parametrize("t", [0, 3, 6])
def test_t_column_expansion_matches_shifted_alphabet(f7, index, t):
    a = Alphabet.of(f7, [1, 2, 4])
    b = Alphabet.of(f7, [5])
    assert lascoux_148_check(index, 2, a, b, t)
