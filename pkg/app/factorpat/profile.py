"""Factorization patterns

λ_i counts irreducible factors of degree i with multiplicity, λ*_i counts
distinct ones, and k is the least i with λ*_i > 0. Everything is read off
the distinct-degree blocks of the squarefree layers; no factor is split
further.
"""

from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.experiment.report import Report
from app.field import FieldCtx
from app.polyring import Poly
from app.factorpat.ddf import ddf_pattern
from app.factorpat.squarefree import squarefree_decomposition


class SquarefreeLayer(BaseModel):
    """One layer of the squarefree decomposition"""

    multiplicity: int
    coeffs: List[int]


class FactorClass(BaseModel):
    """n_{j,m}: distinct irreducible factors of degree j with exact multiplicity m"""

    degree: int
    multiplicity: int
    count: int


class FactorProfile(Report):
    """Degree/multiplicity summary of g's factorization"""

    model_config = ConfigDict(populate_by_name=True)

    kind: str = "profile"
    q: int
    degree: int
    lambda_: List[int] = Field(alias="lambda")
    lambda_star: List[int]
    k: int
    layers: List[SquarefreeLayer]
    factor_classes: List[FactorClass]

    def lam(self, i: int) -> int:
        """λ_i (1-indexed, 0 outside 1..e)"""
        return self.lambda_[i - 1] if 1 <= i <= len(self.lambda_) else 0

    def lam_star(self, i: int) -> int:
        """λ*_i (1-indexed, 0 outside 1..e)"""
        return self.lambda_star[i - 1] if 1 <= i <= len(self.lambda_star) else 0

    def layer_polys(self, ctx: FieldCtx) -> List[Tuple[int, Poly]]:
        return [(layer.multiplicity, Poly.from_coeffs(ctx, layer.coeffs)) for layer in self.layers]

    def class_counts(self) -> Dict[Tuple[int, int], int]:
        return {(c.degree, c.multiplicity): c.count for c in self.factor_classes}

    def csv_table(self):
        header = ["degree", "lambda", "lambda_star"]
        rows = [[i, self.lam(i), self.lam_star(i)] for i in range(1, self.degree + 1)]
        return header, rows

    def describe(self) -> str:
        """Short human-readable form, e.g. 'k=1 λ*=(2,0,0)'"""
        return f"k={self.k} lambda_star=({','.join(str(v) for v in self.lambda_star)})"


def profile(g: Poly) -> FactorProfile:
    """
    Compute λ, λ*, k, the squarefree layers and the counts n_{j,m}

    Raises:
        ValueError: If g is constant
    """
    e = len(g.coeffs) - 1
    if e < 1:
        raise ValueError(f"Factorization pattern needs deg g >= 1, got {g}")

    lam = [0] * e
    lam_star = [0] * e
    classes: Dict[Tuple[int, int], int] = {}
    layers = squarefree_decomposition(g)
    for multiplicity, layer in layers:
        for index, count in enumerate(ddf_pattern(layer)):
            if count:
                degree = index + 1
                lam[index] += multiplicity * count
                lam_star[index] += count
                classes[(degree, multiplicity)] = classes.get((degree, multiplicity), 0) + count

    k = next(i + 1 for i, v in enumerate(lam_star) if v > 0)
    return FactorProfile(
        q=g.ctx.q,
        degree=e,
        lambda_=lam,
        lambda_star=lam_star,
        k=k,
        layers=[SquarefreeLayer(multiplicity=m, coeffs=list(p.coeffs)) for m, p in layers],
        factor_classes=[
            FactorClass(degree=j, multiplicity=m, count=c) for (j, m), c in sorted(classes.items())
        ],
    )

