"""Prime-field arithmetic

FieldCtx is the immutable context every other module threads through.
Elements are plain canonical residues in hot loops; FieldElem wraps a
residue with its context for the public API.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Union

from sympy import isprime

from app.exceptions import CompositeModulus, DivisionByZero


@dataclass(frozen=True)
class FieldCtx:
    """The prime field F_q"""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise CompositeModulus(f"Field modulus must be an integer >= 2, got {self.q}", q=self.q)
        if not isprime(self.q):
            raise CompositeModulus(f"Field modulus {self.q} is not prime", q=self.q)

    def reduce(self, a: int) -> int:
        return a % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises DivisionByZero for 0"""
        a %= self.q
        if a == 0:
            raise DivisionByZero(f"Cannot invert 0 in F_{self.q}", q=self.q)
        return pow(a, -1, self.q)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.q

    def pow(self, a: int, n: int) -> int:
        """a^n by square-and-multiply; negative n inverts first"""
        if n < 0:
            return pow(self.inv(a), -n, self.q)
        return pow(a % self.q, n, self.q)

    def elem(self, value: int) -> "FieldElem":
        return FieldElem(value % self.q, self)

    def __repr__(self) -> str:
        return f"F_{self.q}"


@dataclass(frozen=True)
class FieldElem:
    """A canonical residue in [0, q) bound to its field"""

    value: int
    ctx: FieldCtx

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.q:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.ctx.q}")

    def _coerce(self, other: Union["FieldElem", int]) -> int:
        if isinstance(other, FieldElem):
            if other.ctx.q != self.ctx.q:
                raise ValueError(f"Cannot mix F_{self.ctx.q} and F_{other.ctx.q} elements")
            return other.value
        return other % self.ctx.q

    def __add__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return self.ctx.elem(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return self.ctx.elem(self.value - self._coerce(other))

    def __rsub__(self, other: int) -> "FieldElem":
        return self.ctx.elem(self._coerce(other) - self.value)

    def __mul__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return self.ctx.elem(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return self.ctx.elem(self.ctx.div(self.value, self._coerce(other)))

    def __neg__(self) -> "FieldElem":
        return self.ctx.elem(-self.value)

    def __pow__(self, n: int) -> "FieldElem":
        return self.ctx.elem(self.ctx.pow(self.value, n))

    def inverse(self) -> "FieldElem":
        return self.ctx.elem(self.ctx.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ctx.q})"


def ff_make(q: int) -> FieldCtx:
    """
    Build the prime field F_q

    Raises:
        CompositeModulus: If q < 2 or q is not prime
    """
    return FieldCtx(q)


_OPS: Dict[str, Callable[[FieldCtx, int, int], int]] = {
    "add": lambda ctx, a, b: ctx.add(a, b),
    "sub": lambda ctx, a, b: ctx.sub(a, b),
    "mul": lambda ctx, a, b: ctx.mul(a, b),
    "inv": lambda ctx, a, _b: ctx.inv(a),
    "pow": lambda ctx, a, n: ctx.pow(a, n),
}


def ff_op(
    ctx: FieldCtx,
    op: str,
    a: Union[FieldElem, int],
    b: Union[FieldElem, int, None] = None,
) -> FieldElem:
    """
    Apply a named field operation

    Args:
        ctx: Field context
        op: One of add, sub, mul, inv, pow
        a: First operand
        b: Second operand, or the exponent for pow (ignored for inv)

    Raises:
        ValueError: If op is unknown
        DivisionByZero: On inv(0)
    """
    handler = _OPS.get(op.lower() if op else "")
    if handler is None:
        available = ", ".join(_OPS.keys())
        raise ValueError(f"Unknown field operation '{op}'. Available operations: {available}")

    left = int(a) % ctx.q
    if op.lower() == "pow":
        right = int(b) if b is not None else 1
    else:
        right = int(b) % ctx.q if b is not None else 0
    return ctx.elem(handler(ctx, left, right))
