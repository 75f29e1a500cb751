"""Exhaustive census over every monic f of degree d

Index idx enumerates f = T^d + s_1 T^(d-1) + ... + s_d with s_1 = idx mod q
varying fastest, then s_2, and so on.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from app.exceptions import EnumerationTooLarge
from app.experiment.report import ExactValue, Report
from app.logger import get_logger
from app.polyring import Poly, euclid_raw, poly_format
from app.settings import get_settings
from app.census.parallel import chunk_ranges, map_chunks

logger = get_logger("census")

COST_KEYS = ("div", "fielddiv", "addmul")


def index_to_coeffs(idx: int, q: int, d: int) -> List[int]:
    """Little-endian coefficient list of the idx-th monic f"""
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    for j in range(1, d + 1):
        coeffs[d - j] = idx % q
        idx //= q
    return coeffs


def index_to_point(idx: int, q: int, d: int) -> List[int]:
    """(s_1, ..., s_d) of the idx-th monic f"""
    point = []
    for _ in range(d):
        point.append(idx % q)
        idx //= q
    return point


@dataclass
class CensusAccumulator:
    """Associative counters of a census or sample"""

    d: int
    count: int = 0
    B: List[int] = field(default_factory=list)
    t_div: int = 0
    t_fielddiv: int = 0
    t_addmul: int = 0
    generic: int = 0

    def __post_init__(self):
        if not self.B:
            self.B = [0] * (self.d + 1)

    def add(self, g_coeffs: List[int], f_coeffs: List[int], q: int) -> None:
        raw = euclid_raw(g_coeffs, f_coeffs, q)
        self.count += 1
        self.B[len(raw.last) - 1] += 1
        self.t_div += raw.t_polydiv
        self.t_fielddiv += raw.t_fielddiv
        self.t_addmul += raw.t_addmul
        if len(raw.degrees) == self.d:
            self.generic += 1

    def merge(self, other: "CensusAccumulator") -> "CensusAccumulator":
        if other.d != self.d:
            raise ValueError(f"Cannot merge censuses for d={self.d} and d={other.d}")
        self.count += other.count
        self.B = [a + b for a, b in zip(self.B, other.B)]
        self.t_div += other.t_div
        self.t_fielddiv += other.t_fielddiv
        self.t_addmul += other.t_addmul
        self.generic += other.generic
        return self


def census_chunk(task: Tuple[Tuple[int, ...], int, int, int, int]) -> CensusAccumulator:
    """Worker: accumulate every f with index in [start, stop)"""
    g_coeffs, q, d, start, stop = task
    g_list = list(g_coeffs)
    acc = CensusAccumulator(d)
    for idx in range(start, stop):
        acc.add(g_list, index_to_coeffs(idx, q, d), q)
    return acc


class CensusReport(Report):
    """Exact distribution of gcd degree, coprimality, genericity and cost"""

    kind: str = "census"
    q: int
    e: int
    d: int
    g: str
    total: int
    B: List[int]
    union_from: List[int]
    E_X: ExactValue
    P0: ExactValue
    E_t: Dict[str, ExactValue]
    generic_count: int
    P_generic: ExactValue
    bound_violations: Optional[List[str]] = None  # None: not cross-checked

    @classmethod
    def from_accumulator(cls, acc: CensusAccumulator, g: Poly) -> "CensusReport":
        total = acc.count
        d = acc.d
        if total == 0:
            raise ValueError("Empty census")
        tail = [sum(acc.B[i:]) for i in range(1, d + 1)]
        return cls(
            q=g.ctx.q,
            e=len(g.coeffs) - 1,
            d=d,
            g=poly_format(g),
            total=total,
            B=list(acc.B),
            union_from=tail,
            E_X=ExactValue.of(Fraction(sum(i * b for i, b in enumerate(acc.B)), total)),
            P0=ExactValue.of(Fraction(acc.B[0], total)),
            E_t={
                "div": ExactValue.of(Fraction(acc.t_div, total)),
                "fielddiv": ExactValue.of(Fraction(acc.t_fielddiv, total)),
                "addmul": ExactValue.of(Fraction(acc.t_addmul, total)),
            },
            generic_count=acc.generic,
            P_generic=ExactValue.of(Fraction(acc.generic, total)),
        )

    def csv_table(self):
        header = ["i", "B_i", "union_from_i"]
        rows = [
            [i, b, self.union_from[i - 1] if i >= 1 else self.total] for i, b in enumerate(self.B)
        ]
        return header, rows


def check_enumeration_size(q: int, d: int, cap: Optional[int]) -> int:
    """
    q^d, provided it does not exceed the cap

    Raises:
        EnumerationTooLarge: If q^d > cap
    """
    limit = cap if cap is not None else get_settings().compute.enumeration_cap
    total = q**d
    if total > limit:
        raise EnumerationTooLarge(
            f"Census of {q}^{d} = {total} polynomials exceeds the cap {limit}",
            q=q,
            d=d,
            cap=limit,
        )
    return total


def accumulate_census(
    g: Poly, d: int, cap: Optional[int] = None, workers: Optional[int] = None
) -> CensusAccumulator:
    q = g.ctx.q
    total = check_enumeration_size(q, d, cap)
    chunk = get_settings().compute.chunk_size
    tasks = [(g.coeffs, q, d, start, stop) for start, stop in chunk_ranges(total, chunk)]
    acc = CensusAccumulator(d)
    for part in map_chunks(census_chunk, tasks, workers):
        acc.merge(part)
    return acc


def exact_distribution(
    g: Poly, d: int, cap: Optional[int] = None, workers: Optional[int] = None
) -> CensusReport:
    """
    Run the Euclid trace on every monic f of degree d

    Args:
        g: Fixed polynomial of degree e > d
        d: Degree of f
        cap: Largest allowed q^d (default from settings)
        workers: Worker processes (capped by EUCLAB_THREADS)

    Raises:
        EnumerationTooLarge: If q^d exceeds the cap
    """
    e = len(g.coeffs) - 1
    if not 1 <= d < e:
        raise ValueError(f"Census needs 1 <= d < e, got d={d}, e={e}")
    logger.info("Census started", q=g.ctx.q, e=e, d=d, size=g.ctx.q**d)
    report = CensusReport.from_accumulator(accumulate_census(g, d, cap, workers), g)
    logger.info(
        "Census completed",
        q=report.q,
        d=d,
        P0=report.P0.value,
        E_X=report.E_X.value,
        generic=report.generic_count,
    )
    return report
