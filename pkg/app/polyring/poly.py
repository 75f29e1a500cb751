"""Univariate polynomials over F_q

Coefficients are stored ascending: coeffs[i] is the coefficient of T^i.
The zero polynomial has an empty coefficient tuple and degree NEG_INF.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from app.exceptions import DivisionByZeroPoly, ParseError
from app.field import FieldCtx, FieldElem


class NegInfDegree:
    """Degree of the zero polynomial

    Compares below every integer and supports no arithmetic, so a formula
    that forgets the zero case fails instead of computing with -1.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other: object) -> bool:
        return other is not self

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return other is self

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("-inf-degree")

    def __repr__(self) -> str:
        return "-inf"


NEG_INF = NegInfDegree()

Degree = Union[int, NegInfDegree]


def strip(coeffs: List[int]) -> List[int]:
    """Drop trailing zero coefficients in place and return the list"""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def divmod_raw(a: Sequence[int], b: Sequence[int], q: int) -> Tuple[List[int], List[int]]:
    """
    Synthetic division of coefficient lists over F_q

    b must be stripped and nonzero. Returns stripped (quotient, remainder).
    """
    m = len(a) - 1
    n = len(b) - 1
    if m < n:
        return [], strip(list(a))
    inv = pow(b[-1], -1, q)
    rem = list(a)
    quot = [0] * (m - n + 1)
    for i in range(m - n, -1, -1):
        c = rem[i + n] * inv % q
        quot[i] = c
        if c:
            for j in range(n):
                rem[i + j] = (rem[i + j] - c * b[j]) % q
    del rem[n:]
    return strip(quot), strip(rem)


def mul_raw(a: Sequence[int], b: Sequence[int], q: int) -> List[int]:
    """Schoolbook product of coefficient lists over F_q"""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip([c % q for c in out])


@dataclass(frozen=True)
class Poly:
    """Immutable polynomial over a prime field"""

    ctx: FieldCtx
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("Poly coefficients must not have trailing zeros")
        q = self.ctx.q
        if any(not 0 <= c < q for c in self.coeffs):
            raise ValueError(f"Poly coefficients must be canonical residues mod {q}")

    # construction

    @classmethod
    def from_coeffs(cls, ctx: FieldCtx, values: Iterable[int]) -> "Poly":
        """Reduce values mod q and drop trailing zeros"""
        return cls(ctx, tuple(strip([int(v) % ctx.q for v in values])))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (1,))

    @classmethod
    def monomial(cls, ctx: FieldCtx, n: int, c: int = 1) -> "Poly":
        """c·T^n"""
        return cls.from_coeffs(ctx, [0] * n + [c])

    @classmethod
    def from_roots(cls, ctx: FieldCtx, roots: Iterable[Union[int, FieldElem]]) -> "Poly":
        """Monic polynomial ∏ (T - a) over the given roots (with multiplicity)"""
        coeffs = [1]
        for root in roots:
            coeffs = mul_raw(coeffs, [-int(root) % ctx.q, 1], ctx.q)
        return cls(ctx, tuple(coeffs))

    # inspection

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        """Leading coefficient (0 for the zero polynomial)"""
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # arithmetic

    def _check(self, other: "Poly") -> None:
        if other.ctx.q != self.ctx.q:
            raise ValueError(f"Cannot mix polynomials over F_{self.ctx.q} and F_{other.ctx.q}")

    def _lift(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.from_coeffs(self.ctx, [other])

    def __add__(self, other: Union["Poly", int]) -> "Poly":
        b = self._lift(other).coeffs
        a = self.coeffs
        n = max(len(a), len(b))
        return Poly.from_coeffs(
            self.ctx, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly.from_coeffs(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other: Union["Poly", int]) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return Poly(self.ctx, tuple(mul_raw(self.coeffs, other.coeffs, self.ctx.q)))
        return Poly.from_coeffs(self.ctx, [c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise DivisionByZeroPoly("Division by the zero polynomial")
        quot, rem = divmod_raw(self.coeffs, other.coeffs, self.ctx.q)
        return Poly(self.ctx, tuple(quot)), Poly(self.ctx, tuple(rem))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True when self | other"""
        return (other % self).is_zero

    def monic(self) -> "Poly":
        """Scale to leading coefficient 1 (zero stays zero)"""
        if self.is_zero:
            return self
        inv = self.ctx.inv(self.lead)
        return self * inv

    def derivative(self) -> "Poly":
        return Poly.from_coeffs(self.ctx, [i * c for i, c in enumerate(self.coeffs)][1:])

    def pow_mod(self, n: int, modulus: "Poly") -> "Poly":
        """self^n mod modulus by square-and-multiply"""
        q = self.ctx.q
        m = modulus.coeffs
        if not m:
            raise DivisionByZeroPoly("Modulus is the zero polynomial")
        result = [1]
        base = divmod_raw(self.coeffs, m, q)[1]
        while n > 0:
            if n & 1:
                result = divmod_raw(mul_raw(result, base, q), m, q)[1]
            n >>= 1
            if n:
                base = divmod_raw(mul_raw(base, base, q), m, q)[1]
        return Poly(self.ctx, tuple(divmod_raw(result, m, q)[1]))

    def gcd(self, other: "Poly") -> "Poly":
        return gcd_classical(self, other)

    def eval(self, x: Union[int, FieldElem]) -> int:
        """Horner evaluation at a field point"""
        q = self.ctx.q
        point = int(x) % q
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * point + c) % q
        return acc

    __call__ = eval

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self}, q={self.ctx.q})"


def gcd_classical(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the textbook Euclidean algorithm (no instrumentation)"""
    a._check(b)
    q = a.ctx.q
    x, y = list(a.coeffs), list(b.coeffs)
    while y:
        x, y = y, divmod_raw(x, y, q)[1]
    return Poly(a.ctx, tuple(x)).monic()


def poly_parse(ctx: FieldCtx, text: str) -> Poly:
    """
    Parse an ascending comma-separated coefficient list

    Examples: "5,2,0,1" is T^3 + 2T + 5; "0" is the zero polynomial.

    Raises:
        ParseError: On empty input or non-integer entries
    """
    if text is None or not text.strip():
        raise ParseError("Polynomial text is empty", text=text)
    values = []
    for position, raw in enumerate(text.split(",")):
        token = raw.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(
                f"Coefficient {position} is not an integer: '{token}'", text=text, position=position
            )
    return Poly.from_coeffs(ctx, values)


def poly_format(p: Poly) -> str:
    """Inverse of poly_parse"""
    if p.is_zero:
        return "0"
    return ",".join(str(c) for c in p.coeffs)
