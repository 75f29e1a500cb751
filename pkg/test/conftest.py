"""Pytest configuration and fixtures

Every test starts from fresh settings with a single worker, so nothing
spawns processes unless a test asks for it.
"""

import pytest

from app.field import FieldCtx, ff_make
from app.polyring import Poly
from app.settings import reset_settings


@pytest.fixture(scope="function", autouse=True)
def fresh_settings(monkeypatch):
    """
    Reset the settings singleton around each test

    EUCLAB_THREADS is pinned to 1; tests of the process pool raise it.
    """
    for name in ("EUCLAB_CAP", "EUCLAB_SEED", "EUCLAB_SAMPLES", "EUCLAB_FORMAT", "EUCLAB_MAX_E"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("EUCLAB_THREADS", "1")
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def f3() -> FieldCtx:
    return ff_make(3)


@pytest.fixture
def f5() -> FieldCtx:
    return ff_make(5)


@pytest.fixture
def f7() -> FieldCtx:
    return ff_make(7)


@pytest.fixture
def f67() -> FieldCtx:
    return ff_make(67)


@pytest.fixture
def cube_f3(f3) -> Poly:
    """g = T^3 over F_3, the running small example"""
    return Poly.monomial(f3, 3)
