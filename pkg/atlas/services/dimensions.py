# atlas/services/dimensions.py

"""
DIMENSION COUNTS

- Serre families: dim F + h0(F(k)) = dim C + h0(omega_C(4 - 2k - c1))
- lifted resolutions 0 -> E -> L -> F -> 0 with E, L fixed:
  dim = hom(E, L) - hom(E, E) - hom(L, L) + 1
- expected dimensions, only where a printed value anchors them
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from atlas.services.exceptions import (
    InvalidFamilyInputError,
    UnsupportedExpectedDimensionError,
)
from chow.services.bundles import BundleTerm, hom_total

# (c1, c2) -> ext1 - ext2 at a stable point
EXPECTED_DIMENSIONS = {(0, 4): 29, (-1, 4): 27}


@dataclass(frozen=True)
class SerreFamilyInput:
    dim_curves: int
    h0_omega: int
    h0_Fk: int

    def __post_init__(self):
        if self.h0_Fk < 1:
            raise InvalidFamilyInputError(f"h0(F(k)) must be >= 1 for a section to exist, got {self.h0_Fk}")
        if self.h0_omega < 0:
            raise InvalidFamilyInputError(f"h0(omega_C(n)) must be >= 0, got {self.h0_omega}")


def serre_family_dim(i: SerreFamilyInput) -> int:
    return i.dim_curves + i.h0_omega - i.h0_Fk


def expected_dimension(c1: int, c2: int) -> int:
    try:
        return EXPECTED_DIMENSIONS[(c1, c2)]
    except KeyError:
        raise UnsupportedExpectedDimensionError(
            f"expected dimension for (c1, c2) = ({c1}, {c2}) is not anchored; "
            f"known: {sorted(EXPECTED_DIMENSIONS)}"
        ) from None


def lift_dimension(kernel: Sequence[BundleTerm], cover: Sequence[BundleTerm]) -> int:
    """
    Dimension of the family of cokernels of maps kernel -> cover, modulo
    the automorphisms of both sides (scalars act trivially).
    """
    return hom_total(kernel, cover) - hom_total(kernel, kernel) - hom_total(cover, cover) + 1
