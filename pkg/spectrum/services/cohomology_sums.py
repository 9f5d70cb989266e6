# spectrum/services/cohomology_sums.py

"""
COHOMOLOGY FROM THE SPECTRUM

    h1(F(p)) = sum max(k + p + 2, 0)     for p <= -1
    h2(F(p)) = sum max(-k - p - 2, 0)    for p >= -3 (c1 = 0) / p >= -2 (c1 = -1)
"""

from __future__ import annotations

from spectrum.services.exceptions import TwistOutOfRangeError
from spectrum.services.spectra import Spectrum

H1_MAX_TWIST = -1


def h2_min_twist(c1: int) -> int:
    return -3 if c1 == 0 else -2


def h1_from_spectrum(s: Spectrum, p: int) -> int:
    if p > H1_MAX_TWIST:
        raise TwistOutOfRangeError(f"h1 from the spectrum holds for p <= -1, got {p}")
    return sum(max(k + p + 2, 0) for k in s.values)


def h2_from_spectrum(s: Spectrum, p: int) -> int:
    floor = h2_min_twist(s.c1)
    if p < floor:
        raise TwistOutOfRangeError(
            f"h2 from the spectrum holds for p >= {floor} when c1={s.c1}, got {p}"
        )
    return sum(max(-k - p - 2, 0) for k in s.values)
