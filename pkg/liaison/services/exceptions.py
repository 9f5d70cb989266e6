# liaison/services/exceptions.py

"""
LIAISON SERVICE ERRORS

Centralized domain errors for linkage bookkeeping.
"""


class LiaisonServiceError(Exception):
    """Base exception for all liaison service failures."""


class InvalidLinkError(LiaisonServiceError, ValueError):
    """Raised when a complete intersection cannot link the given curve (s, t < 1 or st <= deg)."""


class NonIntegralGenusError(LiaisonServiceError, ValueError):
    """Raised when the linked genus is not an integer (inconsistent inputs)."""


class NegativeCountError(LiaisonServiceError, ValueError):
    """Raised when a caller-supplied cohomology count is negative."""
