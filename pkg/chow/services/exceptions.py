# chow/services/exceptions.py

"""
CHOW SERVICE ERRORS

Centralized domain errors for Chow-ring and Chern-class arithmetic.
"""


class ChowServiceError(Exception):
    """Base exception for all chow service failures."""


class InexactCoefficientError(ChowServiceError, TypeError):
    """Raised when a floating-point value is offered as a Chow-ring coefficient."""


class InvalidChernTripleError(ChowServiceError, ValueError):
    """Raised when a Chern triple has a negative or non-integer field."""


class ChernIntegralityError(ChowServiceError, ValueError):
    """Raised when a Chern character does not come from integer Chern classes."""


class NonIntegralEulerCharacteristicError(ChowServiceError, ValueError):
    """Raised when the Todd pairing of a character is not an integer."""


class NegativeVirtualRankError(ChowServiceError, ValueError):
    """Raised when a resolution's positive terms have smaller rank than its negative terms."""


class InvalidBundleTermError(ChowServiceError, ValueError):
    """Raised when a bundle term is malformed (bad multiplicity or unparseable text)."""


class UnsupportedHomError(ChowServiceError, ValueError):
    """Raised when Hom between two tangent-bundle twists is outside the supported range."""
