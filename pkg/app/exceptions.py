"""Domain exceptions for euclab

Every error raised by the library derives from EuclabError. The CLI maps the
exit_code attribute to the process exit status:

- 1: usage / input errors
- 2: verification failures
- 3: infeasible or too-large requests
"""

from typing import Any


class EuclabError(Exception):
    """Base class for all euclab errors"""

    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details


class CompositeModulus(EuclabError):
    """Raised when a field is requested for a non-prime modulus"""


class DivisionByZero(EuclabError):
    """Raised when inverting zero in F_q"""


class ParseError(EuclabError):
    """Raised on malformed polynomial text or pattern specs"""


class DivisionByZeroPoly(EuclabError):
    """Raised when dividing by the zero polynomial"""


class DegreeOrder(EuclabError):
    """Raised when the Euclid trace inputs violate deg g > deg f >= 1"""


class ZeroInput(EuclabError):
    """Raised when a resultant is requested for a zero polynomial"""


class NotSquarefree(EuclabError):
    """Raised when distinct-degree splitting receives a non-squarefree input"""


class DimensionMismatch(EuclabError):
    """Raised when a point does not match the number of variables"""


class IndexOutOfRange(EuclabError):
    """Raised when a remainder index or alphabet size is outside its range"""


class InfeasibleSpec(EuclabError):
    """
    Raised when a factorization pattern cannot be realised over F_q

    Either too few monic irreducibles of some degree exist, or the
    seeded search ran out of attempts.
    """

    exit_code = 3


class EnumerationTooLarge(EuclabError):
    """Raised when an exhaustive census would exceed the enumeration cap"""

    exit_code = 3


class TooLarge(EuclabError):
    """Raised when a generic leading-coefficient set exceeds the degree limit"""

    exit_code = 3


class SchurConventionError(EuclabError):
    """Raised when no sign convention makes a Schur remainder reduce"""

    exit_code = 2


class VerificationFailure(EuclabError):
    """Raised when a verification suite reports failures"""

    exit_code = 2
