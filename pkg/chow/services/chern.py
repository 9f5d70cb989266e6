# chow/services/chern.py

"""
CHERN TRIPLES AND CHARACTERS

Chern data lives as a character internally (twisting is a ring operation
there) and is converted back to integer Chern classes only at the edges,
where integrality is asserted.

    ch = r + c1 h + (c1^2 - 2c2)/2 h^2 + (c1^3 - 3c1c2 + 3c3)/6 h^3
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from chow.services.chow_ring import TODD_P3, ChowClass
from chow.services.exceptions import (
    ChernIntegralityError,
    InvalidChernTripleError,
    NonIntegralEulerCharacteristicError,
)


@dataclass(frozen=True)
class ChernTriple:
    rank: int
    c1: int
    c2: int
    c3: int

    def __post_init__(self):
        for name in ("rank", "c1", "c2", "c3"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidChernTripleError(f"{name} must be an integer, got {value!r}")
        if self.rank < 0:
            raise InvalidChernTripleError("rank must be nonnegative")

    def __str__(self) -> str:
        return f"({self.rank}, {self.c1}, {self.c2}, {self.c3})"


def chern_character(t: ChernTriple) -> ChowClass:
    c1, c2, c3 = t.c1, t.c2, t.c3
    return ChowClass(
        t.rank,
        c1,
        Fraction(c1 * c1 - 2 * c2, 2),
        Fraction(c1**3 - 3 * c1 * c2 + 3 * c3, 6),
    )


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ChernIntegralityError(f"{what} = {value} is not an integer")
    return value.numerator


def chern_triple_of(ch: ChowClass) -> ChernTriple:
    """Inverse of chern_character."""
    rank = _as_int(ch.coeff0, "rank")
    c1 = _as_int(ch.coeff1, "c1")
    c2 = _as_int((c1 * c1 - 2 * ch.coeff2) / 2, "c2")
    c3 = _as_int((6 * ch.coeff3 - c1**3 + 3 * c1 * c2) / 3, "c3")
    return ChernTriple(rank, c1, c2, c3)


def twist(t: ChernTriple, n: int) -> ChernTriple:
    return chern_triple_of(chern_character(t) * ChowClass.exp(n))


def euler_char(t: ChernTriple, l: int) -> int:  # noqa: E741
    """chi(F(l)) by Hirzebruch-Riemann-Roch on P3."""
    value = (chern_character(t) * ChowClass.exp(l) * TODD_P3).coeff3
    if value.denominator != 1:
        raise NonIntegralEulerCharacteristicError(
            f"chi of {t} twisted by {l} is {value}; the triple is malformed"
        )
    return value.numerator


def normalize(t: ChernTriple) -> tuple[ChernTriple, int]:
    """
    Twist a rank-2 triple so that c1 lands in {-1, 0}.

    Returns (normalized triple, shift applied).
    """
    if t.rank != 2:
        raise InvalidChernTripleError("normalization is defined for rank 2 only")
    shift = -((t.c1 + 1) // 2)
    return twist(t, shift), shift
