# curves/services/extremal.py

"""
EXTREMAL CURVES

A non-ACM extremal curve C of degree d sits in

    0 -> I_L(-1) -> I_C -> I_{Z/H}(1-d) -> 0

with L a line, H a plane and Z in H n L of length len_z >= 1. When a
section of F(k) of a stable normalized F vanishes on C, k = 1 and len_z
is tightly bounded. Ext^2(F, F) then has closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from curves.services.exceptions import InvalidCurveError, UnsupportedCaseError
from spectrum.services.spectra import validate_c1

SECTION_TWIST = 1

_ALLOWED_LEN_Z = {0: frozenset({1}), -1: frozenset({1, 2})}

# (c1, d) pairs with a closed-form Ext^2 value
_CLOSED_FORM_DEGREE = {0: 5, -1: 4}


def _check_len_z(len_z: int) -> None:
    if len_z < 1:
        raise InvalidCurveError(f"a non-ACM extremal curve has len(Z) >= 1, got {len_z}")


def extremal_genus(d: int, len_z: int) -> int:
    if d < 3:
        raise InvalidCurveError(f"extremal curves are non-planar, so d >= 3; got {d}")
    _check_len_z(len_z)
    return (d - 2) * (d - 3) // 2 - len_z


def extremal_sheaf_h1(c1: int, d: int, len_z: int, t: int) -> int:
    """h1(F(t)) = h1(I_C(t + 1 + c1)) for F(1) built on the extremal curve."""
    validate_c1(c1)
    _check_len_z(len_z)
    if -1 - c1 <= t <= d - 3 - c1:
        return len_z
    if t in (-2 - c1, d - 2 - c1):
        return len_z - 1
    return 0


@dataclass(frozen=True)
class ExtremalConstraints:
    k: int
    len_z_allowed: frozenset[int]


def extremal_constraints(c1: int) -> ExtremalConstraints:
    """From 2 <= 2k <= 3 - c1 - len(Z) for a stable F."""
    validate_c1(c1)
    return ExtremalConstraints(k=SECTION_TWIST, len_z_allowed=_ALLOWED_LEN_Z[c1])


@dataclass(frozen=True)
class ObstructionValue:
    value: int | None = None
    upper_bound: int | None = None


def ext2_lower_bound(c1: int, d: int, len_z: int) -> int:
    """ext^2(F, F) >= h1(F(d - 6 - c1)); equality needs d <= 5 + c1 and xi nonzero on Z."""
    return extremal_sheaf_h1(c1, d, len_z, d - 6 - c1)


def extremal_obstruction(c1: int, d: int, len_z: int, xi_vanishes_on_z: bool) -> ObstructionValue:
    validate_c1(c1)
    if _CLOSED_FORM_DEGREE[c1] != d:
        raise UnsupportedCaseError(
            f"no closed form for (c1, d) = ({c1}, {d}); supported: (0, 5) and (-1, 4)"
        )
    if len_z not in _ALLOWED_LEN_Z[c1]:
        raise UnsupportedCaseError(
            f"len(Z) = {len_z} is impossible for c1 = {c1}; allowed {sorted(_ALLOWED_LEN_Z[c1])}"
        )

    if xi_vanishes_on_z:
        if c1 == 0 or len_z != 1:
            raise UnsupportedCaseError("xi can vanish on Z only when c1 = -1 and len(Z) = 1")
        return ObstructionValue(upper_bound=1)

    # 1 for (0, 5), len_z - 1 for (-1, 4)
    return ObstructionValue(value=ext2_lower_bound(c1, d, len_z))
