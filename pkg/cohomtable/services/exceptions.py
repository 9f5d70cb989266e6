# cohomtable/services/exceptions.py

"""
COHOMTABLE SERVICE ERRORS

Centralized domain errors for cohomology-table synthesis and comparison.

Contradictions are deliberately NOT ValueErrors: they are the signal the
synthesizer exists to produce, and the CLI maps them to their own exit code.
"""


class CohomTableServiceError(Exception):
    """Base exception for all cohomtable service failures."""


class ExpressionSyntaxError(CohomTableServiceError, ValueError):
    """Raised when a parameter expression cannot be parsed."""


class UnboundParameterError(CohomTableServiceError, ValueError):
    """Raised when evaluating an expression with a parameter left unassigned."""


class InvalidEntryError(CohomTableServiceError, ValueError):
    """Raised when a table entry is malformed (negative Known, constant Param)."""


class InvalidTwistRangeError(CohomTableServiceError, ValueError):
    """Raised when a twist range is empty or unparseable."""


class InvalidFactError(CohomTableServiceError, ValueError):
    """Raised when a fact string does not match the fact grammar."""


class SynthesisInputError(CohomTableServiceError, ValueError):
    """Raised when the spectrum does not belong to the requested Chern classes."""


class TableContradictionError(CohomTableServiceError):
    """Raised when facts or rules force a negative entry or break the column identity."""

    def __init__(self, message: str, *, row: int | None = None, twist: int | None = None):
        super().__init__(message)
        self.row = row
        self.twist = twist


class InstantiationError(CohomTableServiceError, ValueError):
    """Raised when an assignment misses, exceeds or excludes the table's parameters."""


class DiffRangeError(CohomTableServiceError, ValueError):
    """Raised when two tables over different twist ranges are compared."""


class GoldenFormatError(CohomTableServiceError, ValueError):
    """Raised when a golden table file violates its schema or is inconsistent."""
