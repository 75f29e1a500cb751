"""Sparse multivariate polynomials over F_q in the variables s_1..s_n"""

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from app.exceptions import DimensionMismatch
from app.field import FieldCtx, FieldElem

Monomial = Tuple[int, ...]


class MultiPoly:
    """
    Sparse polynomial: exponent vector -> nonzero residue

    Equality is structural; str() lists monomials by descending total degree,
    then descending lexicographic exponent order.
    """

    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx: FieldCtx, nvars: int, terms: Optional[Mapping[Monomial, int]] = None):
        self.ctx = ctx
        self.nvars = nvars
        q = ctx.q
        clean: Dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise DimensionMismatch(
                    f"Monomial {mono} has {len(mono)} exponents, expected {nvars}",
                    expected=nvars,
                    received=len(mono),
                )
            c %= q
            if c:
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def zero(cls, ctx: FieldCtx, nvars: int) -> "MultiPoly":
        return cls(ctx, nvars)

    @classmethod
    def constant(cls, ctx: FieldCtx, nvars: int, c: int) -> "MultiPoly":
        return cls(ctx, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, ctx: FieldCtx, nvars: int, i: int) -> "MultiPoly":
        """s_i, 1-indexed"""
        if not 1 <= i <= nvars:
            raise DimensionMismatch(f"Variable s_{i} outside s_1..s_{nvars}", index=i)
        mono = [0] * nvars
        mono[i - 1] = 1
        return cls(ctx, nvars, {tuple(mono): 1})

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial"""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        """Partial degree in s_i; -1 for the zero polynomial"""
        return max((m[i - 1] for m in self.terms), default=-1)

    def coeff(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def leading_monomial(self) -> Monomial:
        """Lexicographically largest exponent vector"""
        if not self.terms:
            raise ValueError("The zero polynomial has no leading monomial")
        return max(self.terms)

    # arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if other.ctx.q != self.ctx.q or other.nvars != self.nvars:
            raise DimensionMismatch(
                "Cannot combine polynomials over different rings",
                q=(self.ctx.q, other.ctx.q),
                nvars=(self.nvars, other.nvars),
            )

    def _lift(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.ctx, self.nvars, other)

    def __add__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return MultiPoly(self.ctx, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ctx, self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return self + (-self._lift(other))

    def __mul__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.ctx, self.nvars, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        q = self.ctx.q
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = (out.get(mono, 0) + c1 * c2) % q
        return MultiPoly(self.ctx, self.nvars, out)

    __rmul__ = __mul__

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """
        Quotient of a division known to be exact

        Raises:
            ValueError: If the divisor is zero or does not divide self
        """
        self._check(divisor)
        if divisor.is_zero:
            raise ValueError("Division by the zero multivariate polynomial")
        ctx = self.ctx
        lead = divisor.leading_monomial()
        lead_inv = ctx.inv(divisor.terms[lead])
        remainder = self
        quotient: Dict[Monomial, int] = {}
        while not remainder.is_zero:
            top = remainder.leading_monomial()
            shift = tuple(a - b for a, b in zip(top, lead))
            if any(x < 0 for x in shift):
                raise ValueError("Multivariate division is not exact")
            c = remainder.terms[top] * lead_inv % ctx.q
            quotient[shift] = c
            remainder = remainder - divisor * MultiPoly(ctx, self.nvars, {shift: c})
        return MultiPoly(ctx, self.nvars, quotient)

    def eval(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise DimensionMismatch(
                f"Point has {len(point)} coordinates, expected {self.nvars}",
                expected=self.nvars,
                received=len(point),
            )
        q = self.ctx.q
        values = [int(x) % q for x in point]
        acc = 0
        for mono, c in self.terms.items():
            term = c
            for x, power in zip(values, mono):
                if power:
                    term = term * pow(x, power, q) % q
            acc += term
        return acc % q

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(self.ctx, self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx.q == other.ctx.q and self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def sorted_terms(self) -> Iterable[Tuple[Monomial, int]]:
        return sorted(
            self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-x for x in item[0]))
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [
                f"s{i + 1}" if power == 1 else f"s{i + 1}^{power}"
                for i, power in enumerate(mono)
                if power
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self}, q={self.ctx.q})"


def eval_multipoly(p: MultiPoly, point: Sequence[Union[int, FieldElem]]) -> FieldElem:
    """
    Evaluate p at a point of F_q^n

    Raises:
        DimensionMismatch: If len(point) differs from the number of variables
    """
    return p.ctx.elem(p.eval([int(x) for x in point]))
