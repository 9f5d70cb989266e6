# chow/services/chow_ring.py

"""
CHOW RING OF P3 (EXACT)

Classes are polynomials in the hyperplane class h truncated at h^4 = 0,
with Fraction coefficients. Floats are refused outright.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable

from chow.services.exceptions import InexactCoefficientError

# h^4 = 0 on P3
TOP_DEGREE = 3


def _exact(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise InexactCoefficientError(
            f"Chow coefficients must be int or Fraction, got {type(value).__name__}"
        )
    return Fraction(value)


@dataclass(frozen=True)
class ChowClass:
    coeff0: Fraction = Fraction(0)
    coeff1: Fraction = Fraction(0)
    coeff2: Fraction = Fraction(0)
    coeff3: Fraction = Fraction(0)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _exact(getattr(self, f.name)))

    # --------------------------------------------------
    # CONSTRUCTORS
    # --------------------------------------------------
    @classmethod
    def from_coefficients(cls, coefficients: Iterable) -> ChowClass:
        """Anything past h^3 is dropped."""
        padded = list(coefficients)[: TOP_DEGREE + 1]
        padded += [0] * (TOP_DEGREE + 1 - len(padded))
        return cls(*padded)

    @classmethod
    def one(cls) -> ChowClass:
        return cls(1)

    @classmethod
    def hyperplane(cls) -> ChowClass:
        return cls(0, 1)

    @classmethod
    def exp(cls, n: int) -> ChowClass:
        """exp(n*h) truncated at degree 3."""
        n = _exact(n)
        return cls.from_coefficients(
            n**i / factorial(i) for i in range(TOP_DEGREE + 1)
        )

    # --------------------------------------------------
    # ACCESS
    # --------------------------------------------------
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.coeff0, self.coeff1, self.coeff2, self.coeff3)

    def degree_part(self, degree: int) -> Fraction:
        if not 0 <= degree <= TOP_DEGREE:
            return Fraction(0)
        return self.coefficients()[degree]

    # --------------------------------------------------
    # RING OPERATIONS
    # --------------------------------------------------
    def _coerce(self, other) -> ChowClass | None:
        if isinstance(other, ChowClass):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return ChowClass(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return ChowClass.from_coefficients(
            a + b for a, b in zip(self.coefficients(), rhs.coefficients())
        )

    __radd__ = __add__

    def __neg__(self) -> ChowClass:
        return ChowClass.from_coefficients(-a for a in self.coefficients())

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coefficients(), rhs.coefficients()
        return ChowClass.from_coefficients(
            sum(a[i] * b[k - i] for i in range(k + 1))
            for k in range(TOP_DEGREE + 1)
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts: list[str] = []
        for degree, coeff in enumerate(self.coefficients()):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            monomial = ("", "h", "h^2", "h^3")[degree]
            if monomial and magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}{monomial}"
            parts.append(f"{sign} {body}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# Todd class of P3: (h / (1 - e^-h))^4 truncated.
TODD_P3 = ChowClass(1, 2, Fraction(11, 6), 1)
