"""Factorization patterns without full factorization

Squarefree layers, distinct-degree block sizes, the patterns λ and λ*,
exact divisor counts η_i with their bounds, and seeded construction of
polynomials with a prescribed pattern.
"""

from app.factorpat.squarefree import squarefree_decomposition
from app.factorpat.ddf import ddf_pattern, is_irreducible
from app.factorpat.profile import FactorClass, FactorProfile, SquarefreeLayer, profile
from app.factorpat.divisors import divisor_count_eta, eta_bounds, gf_coefficient
from app.factorpat.builder import (
    PatternTerm,
    build_with_pattern,
    count_irreducibles,
    format_pattern_spec,
    parse_pattern_spec,
    pattern_degree,
)

__all__ = [
    "squarefree_decomposition",
    "ddf_pattern",
    "is_irreducible",
    "FactorClass",
    "FactorProfile",
    "SquarefreeLayer",
    "profile",
    "divisor_count_eta",
    "eta_bounds",
    "gf_coefficient",
    "PatternTerm",
    "build_with_pattern",
    "count_irreducibles",
    "format_pattern_spec",
    "parse_pattern_spec",
    "pattern_degree",
]
