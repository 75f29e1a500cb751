"""Test polynomials with a prescribed factorization pattern

Pattern grammar (whitespace ignored):

    spec := term ("," term)*
    term := degree ["^" multiplicity] ["x" count]

"1^1x7" is seven distinct linear factors; "2^1x2,5^1x1" is two distinct
irreducible quadratics times an irreducible quintic. All factors are
pairwise distinct across terms.
"""

import re
from typing import List, NamedTuple, Optional, Sequence, Set, Tuple

from sympy import divisors, mobius

from app.exceptions import InfeasibleSpec, ParseError
from app.factorpat.ddf import is_irreducible
from app.field import FieldCtx
from app.logger import get_logger
from app.polyring import Poly
from app.settings import get_settings
from app.splitmix import SplitMixStream

_TERM = re.compile(r"^(\d+)(?:\^(\d+))?(?:[xX](\d+))?$")


class PatternTerm(NamedTuple):
    degree: int
    multiplicity: int
    count: int


def parse_pattern_spec(text: str) -> List[PatternTerm]:
    """
    Parse the pattern mini-language

    Raises:
        ParseError: On malformed terms or zero fields
    """
    if text is None or not text.strip():
        raise ParseError("Pattern spec is empty", text=text)
    terms: List[PatternTerm] = []
    for raw in text.split(","):
        token = re.sub(r"\s+", "", raw)
        match = _TERM.match(token)
        if not match:
            raise ParseError(
                f"Malformed pattern term '{raw.strip()}' (expected degree^multiplicity x count)",
                text=text,
            )
        degree = int(match.group(1))
        multiplicity = int(match.group(2) or 1)
        count = int(match.group(3) or 1)
        if min(degree, multiplicity, count) < 1:
            raise ParseError(f"Pattern term '{raw.strip()}' has a zero field", text=text)
        terms.append(PatternTerm(degree, multiplicity, count))
    return terms


def format_pattern_spec(terms: Sequence[PatternTerm]) -> str:
    return ",".join(f"{t.degree}^{t.multiplicity}x{t.count}" for t in terms)


def count_irreducibles(q: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree n over F_q"""
    if n < 1:
        return 0
    return sum(int(mobius(dd)) * q ** (n // dd) for dd in divisors(n)) // n


def pattern_degree(terms: Sequence[PatternTerm]) -> int:
    return sum(t.degree * t.multiplicity * t.count for t in terms)


def build_with_pattern(
    ctx: FieldCtx,
    terms: Sequence[PatternTerm],
    seed: int,
    max_degree: Optional[int] = None,
    max_attempts: Optional[int] = None,
) -> Poly:
    """
    Deterministically build a monic g with the requested pattern

    Candidates are drawn from the SplitMix64 stream of `seed`; the same
    (seed, terms) always gives the same g.

    Raises:
        InfeasibleSpec: If the degree is out of range, too few irreducibles
            exist, or the search gives up
    """
    logger = get_logger("pattern")
    e = pattern_degree(terms)
    if e < 1:
        raise InfeasibleSpec("Pattern spec describes a constant", spec=format_pattern_spec(terms))
    if max_degree is None:
        max_degree = get_settings().compute.max_pattern_degree
    if e > max_degree:
        raise InfeasibleSpec(
            f"Pattern degree {e} exceeds the configured maximum {max_degree}", degree=e
        )

    needed: dict[int, int] = {}
    for term in terms:
        needed[term.degree] = needed.get(term.degree, 0) + term.count
    for degree, count in needed.items():
        available = count_irreducibles(ctx.q, degree)
        if count > available:
            raise InfeasibleSpec(
                f"Need {count} distinct irreducibles of degree {degree} over F_{ctx.q}, "
                f"only {available} exist",
                degree=degree,
                needed=count,
                available=available,
            )

    stream = SplitMixStream(seed)
    chosen: Set[Tuple[int, ...]] = set()
    result = Poly.one(ctx)
    for term in terms:
        budget = max_attempts or (2000 + 200 * term.degree * term.count)
        for _ in range(term.count):
            factor = None
            for _attempt in range(budget):
                coeffs = tuple(stream.residues(ctx.q, term.degree)) + (1,)
                if coeffs in chosen:
                    continue
                candidate = Poly(ctx, coeffs)
                if is_irreducible(candidate):
                    factor = candidate
                    break
            if factor is None:
                raise InfeasibleSpec(
                    f"No new irreducible of degree {term.degree} found in {budget} attempts",
                    degree=term.degree,
                    seed=seed,
                )
            chosen.add(factor.coeffs)
            for _m in range(term.multiplicity):
                result = result * factor

    logger.debug("Built pattern polynomial", spec=format_pattern_spec(terms), degree=e, seed=seed)
    return result
