"""
Validation of run configurations

Collects every problem in an ExperimentConfig with a suggestion for each,
so the command line can report them all at once.
"""

from .models import ValidationError, ValidationResult
from .validator import ExperimentConfigValidator

__all__ = [
    "ValidationError",
    "ValidationResult",
    "ExperimentConfigValidator",
]
