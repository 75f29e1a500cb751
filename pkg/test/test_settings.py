"""Tests for the settings module"""

import pytest

from app.settings import (
    ComputeSettings,
    LogSettings,
    OutputSettings,
    SamplingSettings,
    Settings,
    get_settings,
    reset_settings,
)


def test_defaults():
    compute = ComputeSettings()
    assert compute.enumeration_cap == 10**8
    assert compute.chunk_size == 20000
    assert compute.max_generic_degree == 12
    assert SamplingSettings().seed == 20240101
    assert SamplingSettings().sample_size == 300000
    assert LogSettings().level == "INFO"
    assert OutputSettings().format == "json"


def test_from_env(monkeypatch):
    monkeypatch.setenv("EUCLAB_THREADS", "4")
    monkeypatch.setenv("EUCLAB_CAP", "1000")
    monkeypatch.setenv("EUCLAB_SEED", "7")
    monkeypatch.setenv("EUCLAB_LOG_LEVEL", "debug")
    monkeypatch.setenv("EUCLAB_FORMAT", "CSV")
    settings = Settings.from_env()
    assert settings.compute.threads == 4
    assert settings.compute.enumeration_cap == 1000
    assert settings.sampling.seed == 7
    assert settings.log.level == "DEBUG"
    assert settings.output.format == "csv"


def test_custom_prefix(monkeypatch):
    monkeypatch.setenv("OTHER_SAMPLES", "12")
    assert SamplingSettings.from_env("OTHER").sample_size == 12


@pytest.mark.parametrize(
    "name,value",
    [("EUCLAB_CAP", "lots"), ("EUCLAB_THREADS", "0"), ("EUCLAB_MAX_E", "1")],
)
def test_bad_integers(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError, match=name):
        Settings.from_env()


def test_validate_rejects_unknown_format(monkeypatch):
    monkeypatch.setenv("EUCLAB_FORMAT", "xml")
    with pytest.raises(ValueError, match="EUCLAB_FORMAT"):
        get_settings(reload=True)


def test_validate_rejects_unknown_log_format(monkeypatch):
    monkeypatch.setenv("EUCLAB_LOG_FORMAT", "fancy")
    with pytest.raises(ValueError, match="EUCLAB_LOG_FORMAT"):
        get_settings(reload=True)


def test_singleton():
    first = get_settings()
    assert get_settings() is first
    reset_settings()
    assert get_settings() is not first
