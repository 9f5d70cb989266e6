# spectrum/services/exceptions.py

"""
SPECTRUM SERVICE ERRORS

Centralized domain errors for spectrum enumeration and evaluation.
"""


class SpectrumServiceError(Exception):
    """Base exception for all spectrum service failures."""


class InvalidFirstChernClassError(SpectrumServiceError, ValueError):
    """Raised when c1 is not normalized into {-1, 0}."""


class InvalidSpectrumError(SpectrumServiceError, ValueError):
    """Raised when a spectrum is malformed (bad size, unparseable text, c2 < 1)."""


class TwistOutOfRangeError(SpectrumServiceError, ValueError):
    """Raised when a spectrum formula is evaluated outside its validity range."""


class EnumerationLimitError(SpectrumServiceError, ValueError):
    """Raised when c2 exceeds the configured enumeration ceiling."""
