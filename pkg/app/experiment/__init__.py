from app.experiment.params import EPS1_MODES, MODES, MODES_NEEDING_G, ExperimentConfig
from app.experiment.report import ExactValue, Interval, Report, round6

__all__ = [
    "EPS1_MODES",
    "MODES",
    "MODES_NEEDING_G",
    "ExperimentConfig",
    "ExactValue",
    "Interval",
    "Report",
    "round6",
]
