# chow/services/hrr.py

"""
CLOSED EULER POLYNOMIALS FOR c2 = 4

Hand-expanded chi(F(l)) for the two normalized cases, kept apart from
euler_char so the golden corpus can cross-check one against the other.
"""

from __future__ import annotations

from fractions import Fraction

from chow.services.exceptions import InvalidChernTripleError


def hrr_reference(c1: int, c3: int, l: int) -> Fraction:  # noqa: E741
    l = Fraction(l)  # noqa: E741
    if c1 == 0:
        return l**3 / 3 + 2 * l**2 - l / 3 + Fraction(c3, 2) - 6
    if c1 == -1:
        return l**3 / 3 + Fraction(3, 2) * l**2 - Fraction(11, 6) * l + Fraction(c3, 2) - 5
    raise InvalidChernTripleError(f"no closed polynomial for c1={c1}")
