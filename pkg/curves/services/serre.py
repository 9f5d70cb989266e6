# curves/services/serre.py

"""
SERRE CORRESPONDENCE (CURVE SIDE)

A section of F(k) vanishing in codimension 2 cuts out a curve C with

    deg(C)        = c2(F(k)) = c2 + c1*k + k^2
    2*p_a(C) - 2  = c3 - deg(C) * (4 - 2k - c1)

and the extension class lives in H^0(omega_C(4 - 2k - c1)).

Only c2 = 4 is anchored by printed formulas; other c2 values are computed
the same way and marked extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass

from chow.services.chern import ChernTriple, twist
from curves.services.exceptions import (
    InvalidCurveError,
    NonIntegralGenusError,
    OmegaAssumptionError,
)
from spectrum.services.spectra import validate_c1

ANCHORED_C2 = 4


@dataclass(frozen=True)
class CurveClass:
    degree: int
    genus: int
    extrapolated: bool = False

    def __post_init__(self):
        if self.degree < 1:
            raise InvalidCurveError(f"curve degree must be >= 1, got {self.degree}")

    def __str__(self) -> str:
        return f"(d={self.degree}, p_a={self.genus})"


def dualizing_twist(c1: int, k: int) -> int:
    """The n with xi in H^0(omega_C(n)) for a section of F(k)."""
    return 4 - 2 * k - c1


def serre_curve(*, c1: int, c2: int, c3: int, k: int) -> CurveClass:
    validate_c1(c1)
    if c2 < 1:
        raise InvalidCurveError(f"c2 must be >= 1, got {c2}")
    if k < 1:
        raise InvalidCurveError(f"the section twist k must be >= 1, got {k}")

    degree = twist(ChernTriple(2, c1, c2, c3), k).c2
    twice_genus = c3 - degree * dualizing_twist(c1, k) + 2
    if twice_genus % 2:
        raise NonIntegralGenusError(
            f"(c1, c2, c3) = ({c1}, {c2}, {c3}) with k={k} gives 2*p_a = {twice_genus}"
        )
    return CurveClass(degree, twice_genus // 2, extrapolated=c2 != ANCHORED_C2)


def curve_chi(c: CurveClass, n: int) -> int:
    """chi(O_C(n)) by Riemann-Roch."""
    return n * c.degree + 1 - c.genus


def omega_sections(c: CurveClass, n: int) -> int:
    """
    h0(omega_C(n)) = h1(O_C(-n)) = -chi(O_C(-n)), assuming h0(O_C(-n)) = 0.

    The assumption holds for every curve met in this classification,
    non-reduced double structures included.
    """
    if n < 1:
        raise OmegaAssumptionError(f"the vanishing h0(O_C(-n)) = 0 needs n >= 1, got {n}")
    value = -curve_chi(c, -n)
    if value < 0:
        raise OmegaAssumptionError(
            f"h0(omega_C({n})) would be {value} for {c}; h0(O_C(-{n})) cannot vanish"
        )
    return value
