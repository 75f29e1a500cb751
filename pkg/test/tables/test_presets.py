"""Tests for the published table presets"""

import pytest

from app.estimator import main_terms
from app.factorpat import parse_pattern_spec, pattern_degree
from app.tables import get_table, list_tables
from helpers import profile_for

ROWS = [
    pytest.param(name, index, id=f"{name}-row{index}")
    for name in list_tables()
    for index in range(len(get_table(name).rows))
]


@pytest.mark.parametrize("name,index", ROWS)
def test_pattern_matches_row(name, index):
    preset = get_table(name)
    row = preset.rows[index]
    terms = parse_pattern_spec(row.pattern)
    assert pattern_degree(terms) == preset.e
    least = min(t.degree for t in terms)
    assert least == row.k
    assert sum(t.count for t in terms if t.degree == least) == row.lambda_star


@pytest.mark.parametrize("name,index", ROWS)
def test_printed_main_terms(name, index):
    preset = get_table(name)
    row = preset.rows[index]
    terms = main_terms(
        preset.q, preset.e, preset.d, profile_for(preset.q, preset.e, row.k, row.lambda_star)
    )
    computed = {"E_g": terms.E_g, "P0": terms.P0, "PG": terms.PG}
    for column, value in computed.items():
        printed = getattr(row.printed, column)
        close = abs(float(value) - printed) <= 1e-6
        assert close != (column in row.misprints), f"{column}: {float(value)} vs {printed}"


def test_every_table_has_printed_values():
    for name in list_tables():
        assert all(row.printed is not None for row in get_table(name).rows)


def test_error_mode_per_table():
    assert get_table("table1").eps1 == "rel"
    assert get_table("table6").eps1 == "abs"
    assert get_table("table6").by_k
