"""Symmetric functions, Schur determinants and the Schur form of remainders"""

from app.symschur.series import (
    Alphabet,
    SymSeries,
    complete_and_elementary,
    complete_series,
    elementary_series,
    negative_series,
    s_difference,
    series_inverse,
    series_mul,
)
from app.symschur.schur import (
    lascoux_148_check,
    multi_schur_det,
    schur_det,
    schur_t_poly,
    t_column_minors,
)
from app.symschur.remainder import (
    SchurRemainder,
    closed_form_sign,
    euclid_normalization,
    lead_vanishing_agrees,
    remainder_via_schur,
    schur_cofactors,
    schur_remainder,
)

__all__ = [
    "Alphabet",
    "SymSeries",
    "complete_and_elementary",
    "complete_series",
    "elementary_series",
    "negative_series",
    "s_difference",
    "series_inverse",
    "series_mul",
    "lascoux_148_check",
    "multi_schur_det",
    "schur_det",
    "schur_t_poly",
    "t_column_minors",
    "SchurRemainder",
    "closed_form_sign",
    "euclid_normalization",
    "lead_vanishing_agrees",
    "remainder_via_schur",
    "schur_cofactors",
    "schur_remainder",
]
