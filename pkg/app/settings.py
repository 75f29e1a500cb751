"""Unified Application Settings

Centralized, typed configuration for euclab (CLI, library runs, tests).
Every value can be overridden from the environment with the EUCLAB_ prefix.
"""

import os
from dataclasses import dataclass, field
from typing import Optional


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    """Read an integer environment variable, failing loudly on garbage"""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{raw}'")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass
class ComputeSettings:
    """Parallelism and size limits for exhaustive and generic computations"""

    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    enumeration_cap: int = 10**8
    chunk_size: int = 20000
    max_generic_degree: int = 12
    max_pattern_degree: int = 64

    @classmethod
    def from_env(cls, prefix: str = "EUCLAB") -> "ComputeSettings":
        """Load compute settings from environment variables"""
        return cls(
            threads=_env_int(f"{prefix}_THREADS", os.cpu_count() or 1, minimum=1),
            enumeration_cap=_env_int(f"{prefix}_CAP", 10**8, minimum=1),
            chunk_size=_env_int(f"{prefix}_CHUNK_SIZE", 20000, minimum=1),
            max_generic_degree=_env_int(f"{prefix}_MAX_E", 12, minimum=2),
            max_pattern_degree=_env_int(f"{prefix}_MAX_PATTERN_DEGREE", 64, minimum=1),
        )


@dataclass
class SamplingSettings:
    """Defaults for seeded Monte-Carlo runs"""

    seed: int = 20240101
    sample_size: int = 300000

    @classmethod
    def from_env(cls, prefix: str = "EUCLAB") -> "SamplingSettings":
        """Load sampling settings from environment variables"""
        return cls(
            seed=_env_int(f"{prefix}_SEED", 20240101),
            sample_size=_env_int(f"{prefix}_SAMPLES", 300000, minimum=1),
        )


@dataclass
class LogSettings:
    """Logging configuration"""

    level: str = "INFO"
    format: str = "console"  # console or plain

    @classmethod
    def from_env(cls, prefix: str = "EUCLAB") -> "LogSettings":
        """Load logging settings from environment variables"""
        return cls(
            level=os.environ.get(f"{prefix}_LOG_LEVEL", "INFO").upper(),
            format=os.environ.get(f"{prefix}_LOG_FORMAT", "console").lower(),
        )


@dataclass
class OutputSettings:
    """Report emission defaults"""

    format: str = "json"

    @classmethod
    def from_env(cls, prefix: str = "EUCLAB") -> "OutputSettings":
        """Load output settings from environment variables"""
        return cls(format=os.environ.get(f"{prefix}_FORMAT", "json").lower())


@dataclass
class Settings:
    """Complete application settings

    Aggregates all configuration domains into a single, typed settings object.
    """

    compute: ComputeSettings = field(default_factory=ComputeSettings)
    sampling: SamplingSettings = field(default_factory=SamplingSettings)
    log: LogSettings = field(default_factory=LogSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    @classmethod
    def from_env(cls, prefix: str = "EUCLAB") -> "Settings":
        """
        Load complete settings from environment variables

        Environment variables:
            EUCLAB_THREADS: Worker processes for census and sampling (default: cpu count)
            EUCLAB_CAP: Maximum census size q^d (default: 10^8)
            EUCLAB_CHUNK_SIZE: Polynomials per parallel work item (default: 20000)
            EUCLAB_MAX_E: Largest degree accepted by generic lead sets (default: 12)
            EUCLAB_MAX_PATTERN_DEGREE: Largest degree the pattern builder constructs (default: 64)
            EUCLAB_SEED: Default master seed (default: 20240101)
            EUCLAB_SAMPLES: Default sample size (default: 300000)
            EUCLAB_LOG_LEVEL: Logging level (default: INFO)
            EUCLAB_LOG_FORMAT: console or plain (default: console)
            EUCLAB_FORMAT: json or csv (default: json)
        """
        return cls(
            compute=ComputeSettings.from_env(prefix),
            sampling=SamplingSettings.from_env(prefix),
            log=LogSettings.from_env(prefix),
            output=OutputSettings.from_env(prefix),
        )

    def validate(self) -> None:
        """
        Validate settings for consistency

        Raises:
            ValueError: If settings are invalid
        """
        if self.log.format not in ("console", "plain"):
            raise ValueError(
                f"EUCLAB_LOG_FORMAT must be 'console' or 'plain', got '{self.log.format}'"
            )
        if self.output.format not in ("json", "csv"):
            raise ValueError(f"EUCLAB_FORMAT must be 'json' or 'csv', got '{self.output.format}'")


_global_settings: Optional[Settings] = None


def get_settings(reload: bool = False) -> Settings:
    """
    Get or create global settings instance

    Args:
        reload: If True, reload settings from environment

    Returns:
        Global Settings instance
    """
    global _global_settings

    if _global_settings is None or reload:
        _global_settings = Settings.from_env()
        _global_settings.validate()

    return _global_settings


def reset_settings() -> None:
    """Reset global settings (primarily for testing)"""
    global _global_settings
    _global_settings = None
