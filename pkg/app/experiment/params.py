"""Experiment parameters

Defines the data model for one command-line run.
"""

from typing import List, Optional

from pydantic import BaseModel

MODES = ("analyze", "census", "sample", "table", "verify", "schur", "trace")
MODES_NEEDING_G = ("analyze", "census", "sample", "schur", "trace")
EPS1_MODES = ("rel", "abs")


class ExperimentConfig(BaseModel):
    """Parameters of a single run; exactly one mode per config"""

    mode: str = "analyze"  # Validated by ExperimentConfigValidator

    # Field and degrees (e is derived from g when omitted)
    q: Optional[int] = None
    e: Optional[int] = None
    d: Optional[int] = None

    # g as ascending coefficients "c0,c1,..." or as a pattern spec "1^1x7"
    g: Optional[str] = None
    pattern: Optional[str] = None
    f: Optional[str] = None  # trace, and the optional evaluation point for schur

    n: Optional[int] = None
    seed: Optional[int] = None
    cap: Optional[int] = None
    workers: Optional[int] = None
    enumeration: bool = False  # sample mode: visit every f once

    eps1: Optional[str] = None  # rel or abs; tables default to their preset
    table: Optional[str] = None
    suites: List[str] = []
    trials: Optional[int] = None

    format: Optional[str] = None  # json or csv, default from settings
    out: Optional[str] = None

    @property
    def needs_g(self) -> bool:
        return self.mode in MODES_NEEDING_G
