"""Alphabets and symmetric-function series over F_q

S(A) = ∏ 1/(1 - za) and Λ(A) = ∏ (1 + za), kept as coefficient vectors.
Differences follow S(A - B) = S(A)·∏(1 - zb). Accessors return 0 for
negative indices, and exact (polynomial) series return 0 past their end.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from app.field import FieldCtx, FieldElem


def series_mul(a: Sequence[int], b: Sequence[int], n: int, q: int) -> List[int]:
    """Product of two series truncated to z^0..z^n"""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] = (out[i + j] + x * y) % q
    return out


def series_inverse(a: Sequence[int], n: int, q: int) -> List[int]:
    """1/a(z) up to z^n; a(0) must be invertible"""
    if not a or a[0] % q == 0:
        raise ValueError("Series inverse needs a nonzero constant term")
    inv0 = pow(a[0], -1, q)
    out = [0] * (n + 1)
    out[0] = inv0
    for i in range(1, n + 1):
        acc = 0
        for j in range(1, min(i, len(a) - 1) + 1):
            acc += a[j] * out[i - j]
        out[i] = -acc * inv0 % q
    return out


@dataclass(frozen=True)
class Alphabet:
    """A finite multiset of field values"""

    ctx: FieldCtx
    elements: Tuple[int, ...]

    @classmethod
    def of(cls, ctx: FieldCtx, values: Iterable[Union[int, FieldElem]]) -> "Alphabet":
        return cls(ctx, tuple(int(v) % ctx.q for v in values))

    def __len__(self) -> int:
        return len(self.elements)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        """Disjoint union A + B"""
        if other.ctx.q != self.ctx.q:
            raise ValueError("Alphabets over different fields")
        return Alphabet(self.ctx, self.elements + other.elements)


@dataclass(frozen=True)
class SymSeries:
    """Coefficients S^0..S^N of a series in z over F_q"""

    ctx: FieldCtx
    coeffs: Tuple[int, ...]
    exact: bool = False

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            return 0
        if i < len(self.coeffs):
            return self.coeffs[i]
        if self.exact:
            return 0
        raise IndexError(f"Series known up to z^{self.order}, asked for z^{i}")

    def truncate(self, n: int) -> "SymSeries":
        return SymSeries(self.ctx, tuple(self[i] for i in range(n + 1)), self.exact)

    def times(self, other: "SymSeries", n: int) -> "SymSeries":
        q = self.ctx.q
        a = [self[i] for i in range(n + 1)]
        b = [other[i] for i in range(n + 1)]
        return SymSeries(self.ctx, tuple(series_mul(a, b, n, q)))


def _root_product(ctx: FieldCtx, alphabet: Alphabet, sign: int) -> List[int]:
    """Coefficients of ∏ (1 + sign·za)"""
    q = ctx.q
    out = [1]
    for a in alphabet.elements:
        nxt = out + [0]
        for i in range(len(out)):
            nxt[i + 1] = (nxt[i + 1] + sign * a * out[i]) % q
        out = nxt
    return out


def elementary_series(alphabet: Alphabet) -> SymSeries:
    """Λ(A) = ∏ (1 + za); Λ^i = 0 for i > |A|"""
    return SymSeries(alphabet.ctx, tuple(_root_product(alphabet.ctx, alphabet, 1)), exact=True)


def negative_series(alphabet: Alphabet) -> SymSeries:
    """S(-A) = ∏ (1 - za), i.e. S^i(-A) = (-1)^i Λ^i(A)"""
    return SymSeries(alphabet.ctx, tuple(_root_product(alphabet.ctx, alphabet, -1)), exact=True)


def complete_series(alphabet: Alphabet, n: int) -> SymSeries:
    """S(A) = 1/∏(1 - za) up to z^n"""
    q = alphabet.ctx.q
    return SymSeries(
        alphabet.ctx, tuple(series_inverse(_root_product(alphabet.ctx, alphabet, -1), n, q))
    )


def complete_and_elementary(alphabet: Alphabet, n: int) -> Tuple[SymSeries, SymSeries]:
    """(S^i(A), Λ^i(A)) for 0 <= i <= n"""
    if n < 0:
        raise ValueError(f"Series order must be >= 0, got {n}")
    return complete_series(alphabet, n), elementary_series(alphabet).truncate(n)


def s_difference(a: Alphabet, b: Alphabet, n: int) -> SymSeries:
    """S^i(A - B) for 0 <= i <= n"""
    if n < 0:
        raise ValueError(f"Series order must be >= 0, got {n}")
    return complete_series(a, n).times(negative_series(b), n)
