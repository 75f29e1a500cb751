"""Generic leading coefficients of the Euclid remainders as polynomials in s_1..s_d"""

from app.genlead.multipoly import MultiPoly, eval_multipoly
from app.genlead.mdet import LAPLACE_LIMIT, bareiss_det, column_cofactors, det_multipoly
from app.genlead.leadset import (
    GenericLeadReport,
    LeadEvaluation,
    GenericLeadSet,
    complete_from_poly,
    generic_lead,
    measure_normalization,
)

__all__ = [
    "MultiPoly",
    "eval_multipoly",
    "LAPLACE_LIMIT",
    "bareiss_det",
    "column_cofactors",
    "det_multipoly",
    "GenericLeadReport",
    "LeadEvaluation",
    "GenericLeadSet",
    "complete_from_poly",
    "generic_lead",
    "measure_normalization",
]
