from abc import ABC, abstractmethod
from typing import List, Sequence

from pydantic import BaseModel, Field

from app.field import FieldCtx
from app.polyring import Poly
from app.splitmix import SplitMixStream

MAX_MESSAGES = 10


class SuiteResult(BaseModel):
    """Counts and the first few failure messages of one suite"""

    name: str
    checked: int = 0
    failures: int = 0
    messages: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, message: str) -> None:
        """Count one check; keep the message when it fails"""
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.messages) < MAX_MESSAGES:
                self.messages.append(message)


class VerificationSuite(ABC):
    """Base class for identity and property suites"""

    default_trials: int = 100

    @abstractmethod
    def run(self, trials: int, seed: int) -> SuiteResult:
        """Run the suite with the given trial count and seed"""
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Get a human-readable description of the suite"""
        pass


class Draws:
    """Seeded random field values, alphabets and polynomials"""

    def __init__(self, seed: int):
        self.stream = SplitMixStream(seed)

    def below(self, bound: int) -> int:
        return self.stream.next_u64() % bound

    def values(self, q: int, count: int) -> List[int]:
        return list(self.stream.residues(q, count))

    def monic(self, ctx: FieldCtx, degree: int) -> Poly:
        return Poly(ctx, tuple(self.values(ctx.q, degree)) + (1,))

    def poly(self, ctx: FieldCtx, max_degree: int) -> Poly:
        """Nonzero polynomial of degree <= max_degree"""
        while True:
            p = Poly.from_coeffs(ctx, self.values(ctx.q, self.below(max_degree + 1) + 1))
            if not p.is_zero:
                return p

    def choice(self, items: Sequence):
        return items[self.below(len(items))]
