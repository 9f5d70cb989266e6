# spectrum/services/spectra.py

"""
SPECTRA (AUTHORITATIVE)

A spectrum is a sorted multiset {k_1 <= ... <= k_c2} attached to a
normalized stable rank-2 reflexive sheaf.

RULES ENFORCED:
- c3 = -2 * sum(k) + c1 * c2
- connectivity: k > 0 present => 1..k present;
  k < -1 present => -1..k present (c1 = 0) / -2..k present (c1 = -1)
- stability: k > 0 present => 0 present;
  k < -1 present => -1 present, and for c1 = 0 also (0 present or -1 twice)
- fast rejections: c3 < 0, c3 parity, c3 above the stability bound

THIS MODULE DOES NOT:
- Decide realizability (see exclusions)
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterator

from spectrum.services.exceptions import (
    EnumerationLimitError,
    InvalidFirstChernClassError,
    InvalidSpectrumError,
)
from spectrum.services.exclusions import lookup_exclusion

logger = logging.getLogger("spectrum")

NORMALIZED_C1 = (-1, 0)

STATUS_REALIZED = "realized"
STATUS_UNREALIZED = "unrealized"


def validate_c1(c1: int) -> int:
    if c1 not in NORMALIZED_C1:
        raise InvalidFirstChernClassError(f"c1 must be -1 or 0, got {c1}")
    return c1


@dataclass(frozen=True)
class Spectrum:
    values: tuple[int, ...]
    c1: int = 0

    def __post_init__(self):
        validate_c1(self.c1)
        values = tuple(sorted(int(v) for v in self.values))
        if not values:
            raise InvalidSpectrumError("a spectrum needs at least one value (c2 >= 1)")
        object.__setattr__(self, "values", values)

    @property
    def c2(self) -> int:
        return len(self.values)

    @property
    def c3(self) -> int:
        return c3_of_spectrum(self)

    @property
    def label(self) -> str:
        return "{" + ",".join(str(v) for v in self.values) + "}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SpectrumVerdict:
    spectrum: Spectrum
    status: str = STATUS_REALIZED
    citation: str = ""

    def __post_init__(self):
        if self.status not in (STATUS_REALIZED, STATUS_UNREALIZED):
            raise InvalidSpectrumError(f"unknown status {self.status!r}")
        if self.status == STATUS_UNREALIZED and not self.citation.strip():
            raise InvalidSpectrumError("unrealized spectra must carry a citation")

    @property
    def realized(self) -> bool:
        return self.status == STATUS_REALIZED


_SPECTRUM_TEXT_RE = re.compile(r"^\s*\{?\s*([+-]?\d+(?:\s*,\s*[+-]?\d+)*)\s*\}?\s*$")


def parse_spectrum(text: str, *, c1: int) -> Spectrum:
    """'-2,-1,0,1' or '{-2,-1,0,1}' -> Spectrum."""
    match = _SPECTRUM_TEXT_RE.match(text or "")
    if not match:
        raise InvalidSpectrumError(f"cannot parse spectrum {text!r}")
    return Spectrum(tuple(int(v) for v in match.group(1).split(",")), c1=c1)


# ============================================================
# INVARIANTS
# ============================================================


def c3_of_spectrum(s: Spectrum) -> int:
    return -2 * sum(s.values) + s.c1 * s.c2


def stability_bound(c1: int, c2: int) -> int:
    return c2 * c2 + (1 + c1) * (2 - c2)


def satisfies_connectivity(values, c1: int) -> bool:
    present = set(values)
    top, bottom = max(present), min(present)
    if top > 0 and not all(k in present for k in range(1, top + 1)):
        return False
    floor = -1 if c1 == 0 else -2
    if bottom < floor and not all(k in present for k in range(bottom, floor + 1)):
        return False
    return True


def satisfies_stability(values, c1: int) -> bool:
    values = list(values)
    present = set(values)
    if max(present) > 0 and 0 not in present:
        return False
    if min(present) < -1:
        if -1 not in present:
            return False
        if c1 == 0 and 0 not in present and values.count(-1) < 2:
            return False
    return True


def c3_is_possible(c1: int, c2: int, c3: int) -> bool:
    """Fast rejections ahead of any enumeration."""
    if c3 < 0:
        return False
    if (c3 - c1 * c2) % 2:
        return False
    return c3 <= stability_bound(c1, c2)


def is_admissible(values, *, c1: int, c3: int) -> bool:
    values = tuple(values)
    return (
        -2 * sum(values) + c1 * len(values) == c3
        and satisfies_connectivity(values, c1)
        and satisfies_stability(values, c1)
    )


# ============================================================
# ENUMERATION
# ============================================================


def _nondecreasing(length: int, total: int, low: int, high: int) -> Iterator[tuple[int, ...]]:
    """Sorted integer tuples of the given length and sum with entries in [low, high]."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(low, high + 1):
        rest = total - first
        if rest < first * (length - 1) or rest > high * (length - 1):
            continue
        for tail in _nondecreasing(length - 1, rest, first, high):
            yield (first, *tail)


def enumerate_spectra(
    *, c1: int, c2: int, c3: int, max_c2: int | None = None
) -> list[SpectrumVerdict]:
    validate_c1(c1)
    if c2 < 1:
        raise InvalidSpectrumError(f"c2 must be >= 1, got {c2}")
    if max_c2 is not None and c2 > max_c2:
        raise EnumerationLimitError(f"c2={c2} exceeds the enumeration ceiling {max_c2}")

    if not c3_is_possible(c1, c2, c3):
        logger.debug("spectra.rejected", extra={"c1": c1, "c2": c2, "c3": c3})
        return []

    target = (c1 * c2 - c3) // 2
    # Connectivity confines every value to [-c2, c2 - 1].
    verdicts: list[SpectrumVerdict] = []
    for values in _nondecreasing(c2, target, -c2, c2 - 1):
        if not is_admissible(values, c1=c1, c3=c3):
            continue
        spectrum = Spectrum(values, c1=c1)
        citation = lookup_exclusion(spectrum)
        if citation:
            verdicts.append(SpectrumVerdict(spectrum, STATUS_UNREALIZED, citation))
        else:
            verdicts.append(SpectrumVerdict(spectrum))

    logger.debug(
        "spectra.enumerated",
        extra={"c1": c1, "c2": c2, "c3": c3, "count": len(verdicts)},
    )
    return verdicts
