"""Instrumented Euclidean algorithm

The remainder chain is the plain one: g = f·q_1 + r_1, f = r_1·q_2 + r_2, ...
No remainder is made monic, the final exact division is counted, and only
the returned gcd is normalised (at no cost to the counters).
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from app.exceptions import DegreeOrder
from app.experiment.report import Report
from app.polyring.poly import Poly, mul_raw, poly_format, strip


class RawTrace:
    """Counters and chain of one Euclid run on coefficient lists"""

    __slots__ = (
        "degrees",
        "last",
        "t_polydiv",
        "t_fielddiv",
        "t_addmul",
        "quotients",
        "remainders",
    )

    def __init__(self):
        self.degrees: List[int] = []
        self.last: List[int] = []
        self.t_polydiv = 0
        self.t_fielddiv = 0
        self.t_addmul = 0
        self.quotients: Optional[List[List[int]]] = None
        self.remainders: Optional[List[List[int]]] = None


def euclid_raw(g: Sequence[int], f: Sequence[int], q: int, keep_chain: bool = False) -> RawTrace:
    """
    Run the counted remainder sequence on stripped coefficient lists

    This is the hot loop shared by euclid_trace, the census and the sampler.
    f must be nonzero with deg f <= deg g.
    """
    trace = RawTrace()
    if keep_chain:
        trace.quotients = []
        trace.remainders = []
    a = list(g)
    b = list(f)
    while True:
        m = len(a) - 1
        n = len(b) - 1
        steps = m - n + 1
        trace.t_polydiv += 1
        trace.t_fielddiv += steps
        trace.t_addmul += n * steps

        inv = pow(b[-1], -1, q)
        quot = [0] * steps if keep_chain else None
        if n == 0:
            rem: List[int] = []
            if quot is not None:
                for i in range(steps):
                    quot[i] = a[i] * inv % q
        else:
            rem = a
            for i in range(m - n, -1, -1):
                c = rem[i + n] * inv % q
                if quot is not None:
                    quot[i] = c
                if c:
                    for j in range(n):
                        rem[i + j] = (rem[i + j] - c * b[j]) % q
            del rem[n:]
            while rem and rem[-1] == 0:
                rem.pop()

        if trace.quotients is not None and quot is not None:
            trace.quotients.append(quot)
        if not rem:
            trace.last = b
            return trace
        trace.degrees.append(len(rem) - 1)
        if trace.remainders is not None:
            trace.remainders.append(list(rem))
        a, b = b, rem


class TraceReport(Report):
    """JSON view of an EuclidTrace"""

    kind: str = "trace"
    q: int
    g: str
    f: str
    quotients: List[str]
    remainders: List[str]
    degree_sequence: List[int]
    h: int
    gcd: str
    gcd_degree: int
    generic: bool
    t_polydiv: int
    t_fielddiv: int
    t_addmul: int
    gcd_normalization_counted: bool = False


@dataclass(frozen=True)
class EuclidTrace:
    """Quotient/remainder chain of (g, f) with exact operation counters"""

    g: Poly
    f: Poly
    quotients: Tuple[Poly, ...]
    remainders: Tuple[Poly, ...]
    gcd: Poly
    t_polydiv: int
    t_fielddiv: int
    t_addmul: int

    @property
    def h(self) -> int:
        return len(self.remainders)

    @property
    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(len(r.coeffs) - 1 for r in self.remainders)

    @property
    def gcd_degree(self) -> int:
        return len(self.gcd.coeffs) - 1

    @property
    def is_generic(self) -> bool:
        """Full-length chain with degrees d-1, d-2, ..., 0"""
        d = len(self.f.coeffs) - 1
        return self.degree_sequence == tuple(range(d - 1, -1, -1))

    def to_report(self) -> TraceReport:
        return TraceReport(
            q=self.g.ctx.q,
            g=poly_format(self.g),
            f=poly_format(self.f),
            quotients=[poly_format(p) for p in self.quotients],
            remainders=[poly_format(r) for r in self.remainders],
            degree_sequence=list(self.degree_sequence),
            h=self.h,
            gcd=poly_format(self.gcd),
            gcd_degree=self.gcd_degree,
            generic=self.is_generic,
            t_polydiv=self.t_polydiv,
            t_fielddiv=self.t_fielddiv,
            t_addmul=self.t_addmul,
        )


def _check_pair(g: Poly, f: Poly) -> None:
    g._check(f)
    if f.is_zero or g.is_zero:
        raise DegreeOrder("Euclid trace needs nonzero inputs", g=str(g), f=str(f))
    e = len(g.coeffs) - 1
    d = len(f.coeffs) - 1
    if d < 1 or d >= e:
        raise DegreeOrder(
            f"Euclid trace needs deg g > deg f >= 1, got deg g={e}, deg f={d}", e=e, d=d
        )


def euclid_trace(g: Poly, f: Poly) -> EuclidTrace:
    """
    Run the instrumented Euclidean algorithm on (g, f)

    Raises:
        DegreeOrder: Unless deg g > deg f >= 1
    """
    _check_pair(g, f)
    ctx = g.ctx
    raw = euclid_raw(g.coeffs, f.coeffs, ctx.q, keep_chain=True)
    quotients = tuple(Poly(ctx, tuple(strip(list(qt)))) for qt in raw.quotients or [])
    remainders = tuple(Poly(ctx, tuple(r)) for r in raw.remainders or [])
    return EuclidTrace(
        g=g,
        f=f,
        quotients=quotients,
        remainders=remainders,
        gcd=Poly(ctx, tuple(raw.last)).monic(),
        t_polydiv=raw.t_polydiv,
        t_fielddiv=raw.t_fielddiv,
        t_addmul=raw.t_addmul,
    )


def is_generic(g: Poly, f: Poly) -> bool:
    """True iff the remainder degrees of (g, f) are d-1, d-2, ..., 0"""
    _check_pair(g, f)
    d = len(f.coeffs) - 1
    return len(euclid_raw(g.coeffs, f.coeffs, g.ctx.q).degrees) == d


def replay_trace(trace: EuclidTrace) -> Tuple[Poly, Poly]:
    """Rebuild (g, f) from the quotient chain and the last nonzero remainder"""
    ctx = trace.g.ctx
    q = ctx.q
    last = trace.remainders[-1] if trace.remainders else trace.f
    newer: List[int] = []
    older = list(last.coeffs)
    for quotient in reversed(trace.quotients[1:]):
        product = mul_raw(quotient.coeffs, older, q)
        width = max(len(product), len(newer))
        rebuilt = [
            ((product[i] if i < len(product) else 0) + (newer[i] if i < len(newer) else 0)) % q
            for i in range(width)
        ]
        newer, older = older, strip(rebuilt)
    f = Poly(ctx, tuple(older))
    product = mul_raw(trace.quotients[0].coeffs, older, q)
    width = max(len(product), len(newer))
    g = Poly.from_coeffs(
        ctx,
        [
            (product[i] if i < len(product) else 0) + (newer[i] if i < len(newer) else 0)
            for i in range(width)
        ],
    )
    return g, f
