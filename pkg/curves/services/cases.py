# curves/services/cases.py

"""
QUINTIC AND SEXTIC CASE PROFILES

Non-planar quintics on a quadric and sextics on two independent cubics
(but no quadric) fall into a short list of cases. The case is an input:
deciding which case a concrete curve belongs to is not done here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from curves.services.exceptions import InvalidCurveError, UnsupportedCaseError
from curves.services.serre import CurveClass

SUBEXTREMAL_MAX_GENUS = 2


# ============================================================
# QUINTICS  h1(I_C(t)) for a quintic on a quadric
# ============================================================


@dataclass(frozen=True)
class Type05:
    """Divisor of type (0, 5) on a smooth quadric."""


@dataclass(frozen=True)
class Type14:
    """Divisor of type (1, 4) on a smooth quadric."""


@dataclass(frozen=True)
class Subextremal:
    genus: int

    def __post_init__(self):
        if self.genus > SUBEXTREMAL_MAX_GENUS:
            raise InvalidCurveError(
                f"subextremal quintics have genus <= {SUBEXTREMAL_MAX_GENUS}, got {self.genus}"
            )


@dataclass(frozen=True)
class Extremal:
    """Two independent quadrics; contains a plane quartic."""


QuinticCase = Union[Type05, Type14, Subextremal, Extremal]


def quintic_h1_profile(case: QuinticCase, t: int) -> int:
    if isinstance(case, Type05):
        return 4 if t in (0, 3) else 6 if t in (1, 2) else 0
    if isinstance(case, Type14):
        return 2 if t in (1, 2) else 0
    if isinstance(case, Subextremal):
        g = case.genus
        if t in (1, 2):
            return 2 - g
        if t <= 0:
            return max(1 - g + t, 0)
        return max(4 - g - t, 0)
    if isinstance(case, Extremal):
        raise UnsupportedCaseError("extremal quintics have no profile here; see the extremal formulas")
    raise UnsupportedCaseError(f"not a quintic case: {case!r}")


# ============================================================
# SEXTICS  with h0(I_C(2)) = 0 and h0(I_C(3)) >= 2
# ============================================================


@dataclass(frozen=True)
class DirectLink:
    """Directly linked by two cubics to a curve of degree 3."""


@dataclass(frozen=True)
class PlanarResidual:
    """
    C meets a plane H in a curve of degree d plus a zero-dimensional Z;
    the residual has degree 6 - d. For d = 4 the residual conic has
    genus k <= -1.
    """

    d: int
    len_z: int
    k: int | None = None

    def __post_init__(self):
        if self.d not in (2, 3, 4):
            raise InvalidCurveError(f"planar part must have degree 2, 3 or 4, got {self.d}")
        if self.len_z < 1:
            raise InvalidCurveError(f"length of Z must be >= 1, got {self.len_z}")
        if self.d == 4 and (self.k is None or self.k > -1):
            raise InvalidCurveError("d = 4 needs the residual genus k <= -1")
        if self.d != 4 and self.k is not None:
            raise InvalidCurveError("the residual genus k only applies when d = 4")


@dataclass(frozen=True)
class QuinticOnQuadric:
    """Contains a quintic lying on a quadric; the residual is a line."""


SexticCase = Union[DirectLink, PlanarResidual, QuinticOnQuadric]


@dataclass(frozen=True)
class SexticInvariants:
    linked: CurveClass | None = None
    genus: int | None = None
    genus_bound: int | None = None
    h0_cubics: int | None = None


def sextic_case_invariants(case: SexticCase, g: int | None = None) -> SexticInvariants:
    if isinstance(case, DirectLink):
        if g is None:
            raise InvalidCurveError("a direct link needs the genus of the sextic")
        return SexticInvariants(linked=CurveClass(3, g - 3), genus=g)

    if isinstance(case, PlanarResidual):
        if case.d == 2:
            genus, bound, cubics = 4 - case.len_z, 1, 2
        elif case.d == 3:
            genus, bound, cubics = 3 - case.len_z, 2, 3
        else:
            genus, bound, cubics = 4 + case.k - case.len_z, 3 + case.k, 4 if case.k == -1 else 3
        if genus > bound:
            raise UnsupportedCaseError(
                f"d={case.d} with length {case.len_z} gives genus {genus} above the bound {bound}"
            )
        if g is not None and g != genus:
            raise UnsupportedCaseError(f"case {case} forces genus {genus}, not {g}")
        return SexticInvariants(genus=genus, genus_bound=bound, h0_cubics=cubics)

    if isinstance(case, QuinticOnQuadric):
        return SexticInvariants(genus=g, h0_cubics=2)

    raise UnsupportedCaseError(f"not a sextic case: {case!r}")
