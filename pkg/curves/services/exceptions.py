# curves/services/exceptions.py

"""
CURVE SERVICE ERRORS

Centralized domain errors for Serre-correspondence curve numerics.
"""


class CurveServiceError(Exception):
    """Base exception for all curve service failures."""


class InvalidCurveError(CurveServiceError, ValueError):
    """Raised when a curve class or curve-side input is malformed (degree < 1, k < 1)."""


class NonIntegralGenusError(CurveServiceError, ValueError):
    """Raised when the genus formula does not produce an integer (parity mismatch)."""


class OmegaAssumptionError(CurveServiceError, ValueError):
    """Raised when h0(O_C(-n)) = 0 cannot hold because the section count would be negative."""


class UnsupportedCaseError(CurveServiceError, ValueError):
    """Raised when a case profile is requested outside what the classification provides."""
