"""Test data factories

Small constructors and a config builder with sensible defaults.
"""

from typing import Any, Dict, List, Optional

from app.experiment import ExperimentConfig
from app.factorpat import FactorProfile
from app.field import ff_make
from app.polyring import Poly


def poly(q: int, *coeffs: int) -> Poly:
    """Poly over F_q from ascending coefficients"""
    return Poly.from_coeffs(ff_make(q), coeffs)


def monic_from_point(q: int, point: List[int]) -> Poly:
    """f = T^d + s_1 T^(d-1) + ... + s_d for point = (s_1, ..., s_d)"""
    return Poly.from_coeffs(ff_make(q), list(reversed(point)) + [1])


def profile_for(q: int, e: int, k: int, lam: int, extra: Optional[Dict[int, int]] = None):
    """
    A FactorProfile with λ*_k = lam and optional further λ*_i = λ_i entries

    Only the counts are filled in; layers and classes stay empty.
    """
    star = [0] * e
    star[k - 1] = lam
    for degree, count in (extra or {}).items():
        star[degree - 1] = count
    return FactorProfile(
        q=q, degree=e, lambda_=list(star), lambda_star=star, k=k, layers=[], factor_classes=[]
    )


class ConfigBuilder:
    """Builder for ExperimentConfig

    Example:
        config = (ConfigBuilder()
            .with_mode("sample")
            .with_g(67, "1,2,3,4,5,6,7,1")
            .with_d(3)
            .build())
    """

    def __init__(self):
        self._data: Dict[str, Any] = {"mode": "analyze", "q": 3, "g": "0,0,0,1", "d": 2}

    def with_mode(self, mode: str) -> "ConfigBuilder":
        self._data["mode"] = mode
        return self

    def with_g(self, q: int, g: str) -> "ConfigBuilder":
        self._data.update(q=q, g=g)
        self._data.pop("pattern", None)
        return self

    def with_pattern(self, q: int, pattern: str) -> "ConfigBuilder":
        self._data.update(q=q, pattern=pattern)
        self._data.pop("g", None)
        return self

    def with_d(self, d: Optional[int]) -> "ConfigBuilder":
        self._data["d"] = d
        return self

    def with_field(self, name: str, value: Any) -> "ConfigBuilder":
        self._data[name] = value
        return self

    def build(self) -> ExperimentConfig:
        return ExperimentConfig(**self._data)
