"""Test helper utilities

Provides reusable factories and custom assertions.
"""

from .factories import ConfigBuilder, monic_from_point, poly, profile_for
from .assertions import assert_exact, assert_interval, assert_poly, assert_within

__all__ = [
    # Factories
    "ConfigBuilder",
    "monic_from_point",
    "poly",
    "profile_for",
    # Assertions
    "assert_exact",
    "assert_interval",
    "assert_poly",
    "assert_within",
]
