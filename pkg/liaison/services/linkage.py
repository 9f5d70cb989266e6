# liaison/services/linkage.py

"""
LINKAGE ARITHMETIC

Two curves C and G are linked by a complete intersection X of surfaces
of degrees s and t when I_X is contained in both and I_X : I_C = I_G.
Then

    deg(C) + deg(G) = s*t
    p_a(C) - p_a(G) = (deg(C) - deg(G)) * (s + t - 4) / 2
    h1(I_C(n))      = h1(I_G(s + t - n - 4))
    h0(I_C(n))      = h0(I_X(n)) + h1(O_G(s + t - n - 4))

Ideal-sheaf cohomology is supplied by the caller; this module only keeps
the books.
"""

from __future__ import annotations

from dataclasses import dataclass

from chow.services.bundles import h0_line
from curves.services.serre import CurveClass, omega_sections
from liaison.services.exceptions import (
    InvalidLinkError,
    NegativeCountError,
    NonIntegralGenusError,
)


@dataclass(frozen=True)
class LinkSpec:
    curve: CurveClass
    s: int
    t: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise InvalidLinkError(f"surface degrees must be positive, got ({self.s}, {self.t})")
        if self.s * self.t <= self.curve.degree:
            raise InvalidLinkError(
                f"a ({self.s}, {self.t}) complete intersection has degree {self.s * self.t}, "
                f"not more than deg(C) = {self.curve.degree}"
            )

    @property
    def offset(self) -> int:
        """s + t - 4, the twist of omega_X."""
        return self.s + self.t - 4


def linked_curve(link: LinkSpec) -> CurveClass:
    c = link.curve
    degree = link.s * link.t - c.degree
    shift = (c.degree - degree) * link.offset
    if shift % 2:
        raise NonIntegralGenusError(
            f"linking {c} by ({link.s}, {link.t}) gives a half-integral genus"
        )
    return CurveClass(degree, c.genus - shift // 2)


def h1_transfer(link: LinkSpec, n: int) -> int:
    """The twist m with h1(I_C(n)) = h1(I_G(m)); an involution."""
    return link.offset - n


def h0_transfer(link: LinkSpec, n: int, *, h0_IX: int, h1_OGamma: int) -> int:
    """h0(I_C(n)) from h0(I_X(n)) and h1(O_G(s + t - n - 4))."""
    if h0_IX < 0 or h1_OGamma < 0:
        raise NegativeCountError(f"cohomology counts must be >= 0, got ({h0_IX}, {h1_OGamma})")
    return h0_IX + h1_OGamma


def complete_intersection_h0(s: int, t: int, n: int) -> int:
    """h0(I_X(n)) for X of type (s, t), from its Koszul resolution."""
    if s < 1 or t < 1:
        raise InvalidLinkError(f"surface degrees must be positive, got ({s}, {t})")
    return h0_line(n - s) + h0_line(n - t) - h0_line(n - s - t)


def linked_family_dim(
    *, dim_H: int, h0_C_s: int, h0_C_t: int, h0_C2_s: int, h0_C2_t: int
) -> int:
    """
    Dimension of the family of curves C linked to a family of dimension
    dim_H of curves C2.

    dim H_C + h0(I_C(s)) + h0(I_C(t)) = dim H_C2 + h0(I_C2(s)) + h0(I_C2(t)),
    both sides counting pairs (X, curve) with the curve in X.
    """
    counts = (h0_C_s, h0_C_t, h0_C2_s, h0_C2_t)
    if any(c < 0 for c in counts):
        raise NegativeCountError(f"section counts must be >= 0, got {counts}")
    return dim_H + h0_C2_s + h0_C2_t - h0_C_s - h0_C_t


def linked_h1_structure_sheaf(gamma: CurveClass, m: int) -> int | None:
    """
    h1(O_G(m)) = h0(omega_G(-m)) for m <= -1, under the same vanishing
    h0(O_G(m)) = 0 the curve-side section counts use. None for m >= 0.
    """
    if m >= 0:
        return None
    return omega_sections(gamma, -m)
