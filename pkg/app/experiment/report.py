"""Report base types

Every report emitted by euclab is a pydantic model. Exact rationals travel as
ExactValue pairs: the exact "p/q" string and a float rounded half-to-even at
six decimals.
"""

from fractions import Fraction
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel


def round6(value: Fraction) -> float:
    """Half-to-even rounding of an exact rational at six decimals"""
    return float(round(Fraction(value), 6))


class ExactValue(BaseModel):
    """An exact rational with its rounded float"""

    exact: str
    value: float

    @classmethod
    def of(cls, value: Fraction | int) -> "ExactValue":
        fraction = Fraction(value)
        return cls(exact=str(fraction), value=round6(fraction))

    def as_fraction(self) -> Fraction:
        return Fraction(self.exact)


class Interval(BaseModel):
    """A closed interval [lower, upper] with exact endpoints"""

    lower: ExactValue
    upper: ExactValue

    @classmethod
    def of(cls, lower: Fraction | int, upper: Fraction | int) -> "Interval":
        return cls(lower=ExactValue.of(lower), upper=ExactValue.of(upper))

    def contains(self, value: Fraction | int) -> bool:
        return self.lower.as_fraction() <= Fraction(value) <= self.upper.as_fraction()


def _flatten(prefix: str, value: Any, out: Dict[str, Any]) -> None:
    if isinstance(value, dict):
        if set(value.keys()) == {"exact", "value"}:
            out[prefix] = value["value"]
            return
        for key, inner in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), inner, out)
    elif isinstance(value, list):
        out[prefix] = ";".join(str(_scalar(v)) for v in value)
    else:
        out[prefix] = value


def _scalar(value: Any) -> Any:
    if isinstance(value, dict) and set(value.keys()) == {"exact", "value"}:
        return value["value"]
    return value


class Report(BaseModel):
    """Base class for every emitted report"""

    kind: str = "report"

    def csv_table(self) -> Tuple[List[str], List[List[Any]]]:
        """
        Flatten the report into a single CSV row

        Nested models become dotted column names, lists are joined with ';'
        and exact values contribute their rounded float. Reports with a
        natural row structure override this.
        """
        flat: Dict[str, Any] = {}
        _flatten("", self.model_dump(), flat)
        header = list(flat.keys())
        return header, [[flat[h] for h in header]]

