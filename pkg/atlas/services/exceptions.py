# atlas/services/exceptions.py

"""
ATLAS SERVICE ERRORS

Centralized domain errors for the component registry and dimension counts.
Verification failures are report entries, never exceptions.
"""


class AtlasServiceError(Exception):
    """Base exception for all atlas service failures."""


class RegistryFormatError(AtlasServiceError, ValueError):
    """Raised when the registry file or a record violates the schema or record invariants."""


class UnsupportedExpectedDimensionError(AtlasServiceError, ValueError):
    """Raised when an expected dimension is requested for an unanchored (c1, c2)."""


class InvalidFamilyInputError(AtlasServiceError, ValueError):
    """Raised when family-dimension ingredients are malformed (e.g. h0(F(k)) < 1)."""
