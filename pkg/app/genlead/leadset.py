"""Generic leading coefficients G_1..G_d

F_k is the coefficient of T^(d-k) in ε·u·g + v·f, where u and v are the
Schur cofactors of the k-th remainder written over the generic coefficients
s_1..s_d of f = T^d + s_1 T^(d-1) + ... + s_d. Complete functions of A (the
roots of g) come from the reversed coefficients of g, so no roots are ever
computed. G_k = μ_k·F_k with μ_k the unit making s_k^(e-d+k) monic.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from pydantic import BaseModel

from app.exceptions import DegreeOrder, SchurConventionError, TooLarge
from app.experiment.report import Report
from app.field import FieldCtx
from app.genlead.mdet import column_cofactors
from app.genlead.multipoly import MultiPoly
from app.logger import get_logger
from app.polyring import Poly, euclid_raw, euclid_trace, poly_format
from app.settings import get_settings
from app.splitmix import SplitMixStream
from app.symschur import SymSeries, series_inverse

logger = get_logger("genlead")


def complete_from_poly(g: Poly, n: int) -> SymSeries:
    """
    S^i(A) for the roots A of a monic g, 0 <= i <= n

    The series is the inverse of z^e·g(1/z) = ∏(1 - za).
    """
    if not g.is_monic:
        raise ValueError(f"complete_from_poly needs a monic polynomial, got {g}")
    if n < 0:
        raise ValueError(f"Series order must be >= 0, got {n}")
    reversed_coeffs = list(reversed(g.coeffs))
    return SymSeries(g.ctx, tuple(series_inverse(reversed_coeffs, n, g.ctx.q)))


def _signed(value: int, q: int) -> int:
    return value if value <= q // 2 else value - q


class _Entries:
    """Entries S^m(A - B) and S^m(B - A) as polynomials in s_1..s_d"""

    def __init__(self, g: Poly, d: int, order: int):
        ctx = g.ctx
        self.ctx = ctx
        self.d = d
        self.e = len(g.coeffs) - 1
        self.g = g
        self.one = MultiPoly.constant(ctx, d, 1)
        self.zero = MultiPoly.zero(ctx, d)
        self.s = [self.one] + [MultiPoly.variable(ctx, d, i) for i in range(1, d + 1)]
        self.complete_a = complete_from_poly(g, order)
        # S^j(B): inverse of Σ s_i z^i
        complete_b = [self.one]
        for j in range(1, order + 1):
            acc = self.zero
            for i in range(1, min(j, d) + 1):
                acc = acc + self.s[i] * complete_b[j - i]
            complete_b.append(-acc)
        self.complete_b = complete_b

    def neg_a(self, i: int) -> int:
        """S^i(-A) = coefficient of T^(e-i) in g"""
        return self.g.coeff(self.e - i) if 0 <= i <= self.e else 0

    def a_minus_b(self, m: int) -> MultiPoly:
        if m < 0:
            return self.zero
        acc = self.zero
        for j in range(min(m, self.d) + 1):
            c = self.complete_a[m - j]
            if c:
                acc = acc + self.s[j] * c
        return acc

    def b_minus_a(self, m: int) -> MultiPoly:
        if m < 0:
            return self.zero
        acc = self.zero
        for j in range(m + 1):
            c = self.neg_a(m - j)
            if c:
                acc = acc + self.complete_b[j] * c
        return acc

    def f_coeff(self, i: int) -> MultiPoly:
        """Coefficient of T^i in f"""
        if 0 <= i <= self.d:
            return self.s[self.d - i]
        return self.zero


def _cofactors(entries, index: Sequence[int], one: MultiPoly) -> List[MultiPoly]:
    """Coefficients of S_J(X - T), highest power of T first"""
    n = len(index)
    matrix = [[entries(index[c] + c - r) for c in range(n)] for r in range(n + 1)]
    return column_cofactors(matrix, one)


@dataclass
class GenericLeadSet:
    """G_1..G_d for a fixed g and degree d"""

    ctx: FieldCtx
    g: Poly
    e: int
    d: int
    leads: List[MultiPoly]
    sign_convention: List[int]
    monic_sign: List[int]
    euclid_scalar: List[Optional[int]] = field(default_factory=list)

    def lead(self, k: int) -> MultiPoly:
        """G_k, 1-indexed"""
        return self.leads[k - 1]

    def evaluate(self, point: Sequence[int]) -> List[int]:
        """[G_1(point), ..., G_d(point)]"""
        return [p.eval(point) for p in self.leads]

    def all_nonzero(self, point: Sequence[int]) -> bool:
        return all(p.eval(point) for p in self.leads)

    def point_of(self, f: Poly) -> List[int]:
        """(s_1, ..., s_d) of a monic f of degree d"""
        if not f.is_monic or len(f.coeffs) - 1 != self.d:
            raise DegreeOrder(f"Expected a monic f of degree {self.d}, got {f}", d=self.d)
        return [f.coeff(self.d - i) for i in range(1, self.d + 1)]

    def evaluate_at(self, f: Poly) -> "LeadEvaluation":
        """G_k(f) next to the remainder degrees of the Euclid chain of (g, f)"""
        point = self.point_of(f)
        values = self.evaluate(point)
        trace = euclid_trace(self.g, f)
        nonzero = all(values)
        return LeadEvaluation(
            f=poly_format(f),
            point=point,
            values=[_signed(v, self.ctx.q) for v in values],
            degree_sequence=list(trace.degree_sequence),
            generic=trace.is_generic,
            all_nonzero=nonzero,
            consistent=nonzero == trace.is_generic,
        )

    def to_report(self, evaluation: Optional["LeadEvaluation"] = None) -> "GenericLeadReport":
        return GenericLeadReport(
            q=self.ctx.q,
            e=self.e,
            d=self.d,
            g=poly_format(self.g),
            leads=[str(p) for p in self.leads],
            total_degrees=[p.total_degree() for p in self.leads],
            sign_convention=self.sign_convention,
            monic_sign=self.monic_sign,
            euclid_scalar=[
                None if s is None else _signed(s, self.ctx.q) for s in self.euclid_scalar
            ],
            evaluation=evaluation,
        )


class LeadEvaluation(BaseModel):
    """G_k at one concrete f; consistent when all nonzero coincides with a generic chain"""

    f: str
    point: List[int]
    values: List[int]
    degree_sequence: List[int]
    generic: bool
    all_nonzero: bool
    consistent: bool


class GenericLeadReport(Report):
    """Printable view of a GenericLeadSet"""

    kind: str = "genlead"
    q: int
    e: int
    d: int
    g: str
    leads: List[str]
    total_degrees: List[int]
    sign_convention: List[int]
    monic_sign: List[int]
    euclid_scalar: List[Optional[int]]
    evaluation: Optional[LeadEvaluation] = None

    def csv_table(self):
        header = ["k", "lead", "total_degree", "sign", "monic_sign", "euclid_scalar", "value_at_f"]
        rows = [
            [
                k + 1,
                self.leads[k],
                self.total_degrees[k],
                self.sign_convention[k],
                self.monic_sign[k],
                self.euclid_scalar[k] if k < len(self.euclid_scalar) else None,
                self.evaluation.values[k] if self.evaluation else None,
            ]
            for k in range(self.d)
        ]
        return header, rows


def generic_lead(g: Poly, d: int, max_degree: Optional[int] = None) -> GenericLeadSet:
    """
    Build G_1..G_d for a monic g of degree e > d

    Args:
        g: Monic polynomial of degree e
        d: Degree of the generic monic f, 1 <= d < e
        max_degree: Largest accepted e (default from settings)

    Raises:
        TooLarge: If e exceeds max_degree
        SchurConventionError: If no sign makes the top coefficients cancel
    """
    if not g.is_monic:
        raise ValueError(f"generic_lead needs a monic g, got {g}")
    e = len(g.coeffs) - 1
    if not 1 <= d < e:
        raise ValueError(f"generic_lead needs 1 <= d < e, got d={d}, e={e}")
    limit = max_degree if max_degree is not None else get_settings().compute.max_generic_degree
    if e > limit:
        raise TooLarge(f"Degree {e} exceeds the generic-lead limit {limit}", e=e, limit=limit)

    ctx = g.ctx
    entries = _Entries(g, d, e - d + 2 * d)
    one = entries.one
    leads: List[MultiPoly] = []
    signs: List[int] = []
    monic_signs: List[int] = []
    logger.info("Building generic leading coefficients", q=ctx.q, e=e, d=d)

    for k in range(1, d + 1):
        n_u = k - 1
        n_v = e - d + k - 1
        u = _cofactors(entries.b_minus_a, (e - d + k,) * n_u, one)
        v = _cofactors(entries.a_minus_b, (k,) * n_v, one)

        if u[0] == -v[0]:
            sign = 1
        elif u[0] == v[0]:
            sign = -1
        else:
            raise SchurConventionError("Top coefficients do not cancel for either sign", k=k)

        # coefficient of T^(d-k); u[r] multiplies T^(n_u - r), v[r] multiplies T^(n_v - r)
        target = d - k
        lead = entries.zero
        for r, coeff in enumerate(u):
            c = g.coeff(target - (n_u - r)) if target - (n_u - r) >= 0 else 0
            if c and not coeff.is_zero:
                lead = lead + coeff * (c * sign)
        for r, coeff in enumerate(v):
            if not coeff.is_zero:
                lead = lead + coeff * entries.f_coeff(target - (n_v - r))

        top = [0] * d
        top[k - 1] = e - d + k
        raw = lead.coeff(top)
        if raw == 0:
            raise SchurConventionError(f"G_{k} has no s_{k}^{e - d + k} term", k=k)
        leads.append(lead * ctx.inv(raw))
        signs.append(sign)
        monic_signs.append(_signed(raw, ctx.q))

    degrees = [p.total_degree() for p in leads]
    logger.info("Generic leading coefficients built", e=e, d=d, degrees=degrees)
    return GenericLeadSet(ctx, g, e, d, leads, signs, monic_signs, [None] * d)


def measure_normalization(
    lead_set: GenericLeadSet, trials: int = 400, seed: int = 1
) -> List[Optional[int]]:
    """
    Measure eval(G_k) / (c_k·∏_{j<k} lc(r_j)^2) on random monic f

    c_k is the T^(d-k) coefficient of the Euclid remainder r_k. Only f whose
    remainders r_1..r_(k-1) have degrees d-1..d-k+1 and c_k != 0 count.
    The result is stored on the set and returned; None marks a k for which
    no such f turned up.

    Raises:
        SchurConventionError: If two samples disagree for the same k
    """
    ctx, d = lead_set.ctx, lead_set.d
    q = ctx.q
    g_coeffs = list(lead_set.g.coeffs)
    stream = SplitMixStream(seed)
    scalars: List[Optional[int]] = [None] * d
    for _ in range(trials):
        point = [int(x) for x in stream.residues(q, d)]
        f_coeffs = [point[d - 1 - i] for i in range(d)] + [1]
        raw = euclid_raw(g_coeffs, f_coeffs, q, keep_chain=True)
        remainders = raw.remainders or []
        scale = 1
        for k in range(1, d + 1):
            if k > len(remainders):
                break
            r_k = remainders[k - 1]
            c_k = r_k[d - k] if len(r_k) > d - k else 0
            if c_k:
                value = lead_set.leads[k - 1].eval(point) * ctx.inv(c_k * scale) % q
                if scalars[k - 1] is None:
                    scalars[k - 1] = value
                elif scalars[k - 1] != value:
                    raise SchurConventionError(
                        "Normalization is not constant", k=k, seen=scalars[k - 1], value=value
                    )
            if len(r_k) - 1 != d - k:
                break
            scale = scale * r_k[-1] * r_k[-1] % q
    lead_set.euclid_scalar = scalars
    return scalars
