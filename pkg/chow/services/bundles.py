# chow/services/bundles.py

"""
BUNDLE TERMS

Split sums of line bundles O(a) and twisted tangent bundles T(a) on P3:
the only building blocks resolutions are written in.

The tangent bundle enters through its Euler-sequence character
4*exp(h) - 1; nothing else non-split is representable.

Also: dimensions of Hom between such terms, which is what a lifted
resolution's parameter count needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable

from chow.services.chow_ring import ChowClass
from chow.services.exceptions import InvalidBundleTermError, UnsupportedHomError


class BundleKind(str, Enum):
    LINE = "O"
    TANGENT = "T"


_TERM_RE = re.compile(r"^\s*([OT])\s*\(\s*([+-]?\d+)\s*\)\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True)
class BundleTerm:
    kind: BundleKind
    twist: int
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", BundleKind(self.kind))
        if isinstance(self.multiplicity, bool) or not isinstance(self.multiplicity, int):
            raise InvalidBundleTermError("multiplicity must be an integer")
        if self.multiplicity < 1:
            raise InvalidBundleTermError(f"multiplicity must be >= 1, got {self.multiplicity}")

    @classmethod
    def line(cls, a: int, multiplicity: int = 1) -> BundleTerm:
        return cls(BundleKind.LINE, a, multiplicity)

    @classmethod
    def tangent(cls, a: int, multiplicity: int = 1) -> BundleTerm:
        return cls(BundleKind.TANGENT, a, multiplicity)

    @property
    def rank(self) -> int:
        return (1 if self.kind is BundleKind.LINE else 3) * self.multiplicity

    def character(self) -> ChowClass:
        ch = ChowClass.exp(self.twist)
        if self.kind is BundleKind.TANGENT:
            ch = (4 * ChowClass.exp(1) - 1) * ch
        return self.multiplicity * ch

    def __str__(self) -> str:
        text = f"{self.kind.value}({self.twist})"
        return f"{text}^{self.multiplicity}" if self.multiplicity > 1 else text


def parse_bundle_term(text: str) -> BundleTerm:
    """'O(-2)^5' -> BundleTerm(LINE, -2, 5)."""
    match = _TERM_RE.match(text or "")
    if not match:
        raise InvalidBundleTermError(f"cannot parse bundle term {text!r}")
    kind, twist_, mult = match.groups()
    return BundleTerm(BundleKind(kind), int(twist_), int(mult) if mult else 1)


# ============================================================
# GLOBAL SECTIONS
# ============================================================


def h0_line(n: int) -> int:
    return comb(n + 3, 3) if n >= 0 else 0


def h0_tangent(n: int) -> int:
    # Euler sequence; H^1(O(n)) = 0 on P3
    return 4 * h0_line(n + 1) - h0_line(n)


def h0_cotangent(n: int) -> int:
    if n < 2:
        return 0
    return 4 * comb(n + 2, 3) - comb(n + 3, 3)


def hom_dimension(source: BundleTerm, target: BundleTerm) -> int:
    """dim Hom(source, target), multiplicities included."""
    shift = target.twist - source.twist
    line, tangent = BundleKind.LINE, BundleKind.TANGENT

    if source.kind is line and target.kind is line:
        per_pair = h0_line(shift)
    elif source.kind is line and target.kind is tangent:
        per_pair = h0_tangent(shift)
    elif source.kind is tangent and target.kind is line:
        per_pair = h0_cotangent(shift)
    elif shift == 0:
        # T is simple
        per_pair = 1
    elif shift < 0:
        # T is stable
        per_pair = 0
    else:
        raise UnsupportedHomError(f"Hom({source}, {target}) is not supported")

    return per_pair * source.multiplicity * target.multiplicity


def hom_total(sources: Iterable[BundleTerm], targets: Iterable[BundleTerm]) -> int:
    targets = list(targets)
    return sum(hom_dimension(s, t) for s in sources for t in targets)
