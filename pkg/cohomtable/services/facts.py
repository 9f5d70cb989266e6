# cohomtable/services/facts.py

"""
SYNTHESIS FACTS

Geometric input the spectrum cannot supply, in one textual grammar shared
by the command line and the golden files:

    h<i>@<p>=<v>              h^i(F(p)) = v
    param:h<i>@<p>=<expr>     h^i(F(p)) = expr, e.g. "0+l", "l*k+m"
    reg=<r>                   F is r-regular
    acm                       h^1(F(p)) = 0 on the whole range
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Union

from cohomtable.services.exceptions import ExpressionSyntaxError, InvalidFactError
from cohomtable.services.expressions import ParamExpr
from cohomtable.services.tables import ParamBounds


@dataclass(frozen=True)
class ValueFact:
    row: int
    twist: int
    value: int

    def __str__(self) -> str:
        return f"h{self.row}@{self.twist}={self.value}"


@dataclass(frozen=True)
class ParamFact:
    row: int
    twist: int
    base: int
    term: ParamExpr
    bounds: Mapping[str, ParamBounds] = field(default_factory=dict, compare=False, hash=False)

    @property
    def expr(self) -> ParamExpr:
        return self.term + self.base

    def __str__(self) -> str:
        return f"param:h{self.row}@{self.twist}={self.expr}"


@dataclass(frozen=True)
class RegularityFact:
    regularity: int

    def __str__(self) -> str:
        return f"reg={self.regularity}"


@dataclass(frozen=True)
class AcmFact:
    def __str__(self) -> str:
        return "acm"


Fact = Union[ValueFact, ParamFact, RegularityFact, AcmFact]

_ENTRY_RE = re.compile(r"^\s*(param:)?\s*h([0-3])\s*@\s*([+-]?\d+)\s*=\s*(.+?)\s*$")
_REG_RE = re.compile(r"^\s*reg\s*=\s*([+-]?\d+)\s*$")
_ACM_RE = re.compile(r"^\s*acm\s*$", re.IGNORECASE)


def parse_fact(text: str, bounds: Mapping[str, ParamBounds] | None = None) -> Fact:
    text = text or ""
    if _ACM_RE.match(text):
        return AcmFact()

    match = _REG_RE.match(text)
    if match:
        return RegularityFact(int(match.group(1)))

    match = _ENTRY_RE.match(text)
    if not match:
        raise InvalidFactError(f"unrecognised fact {text!r}")
    is_param, row, twist, rhs = match.groups()
    row, twist = int(row), int(twist)

    try:
        expr = ParamExpr.parse(rhs)
    except ExpressionSyntaxError as exc:
        raise InvalidFactError(f"fact {text!r}: {exc}") from exc

    if not is_param:
        if not expr.is_constant:
            raise InvalidFactError(f"fact {text!r} uses parameters; prefix it with 'param:'")
        return ValueFact(row, twist, expr.value)

    if expr.is_constant:
        raise InvalidFactError(f"parameter fact {text!r} has no parameter")
    bounds = bounds or {}
    return ParamFact(
        row,
        twist,
        expr.constant_term,
        expr.without_constant(),
        {name: bounds.get(name, ParamBounds()) for name in sorted(expr.names())},
    )


def parse_facts(texts, bounds: Mapping[str, ParamBounds] | None = None) -> list[Fact]:
    return [parse_fact(t, bounds) for t in texts or ()]


_BOUND_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\d+)\s*:\s*(\d+|inf)?\s*$")


def parse_bound(text: str) -> tuple[str, ParamBounds]:
    """'l=0:1' -> ("l", [0, 1]); 'l=2:' or 'l=2:inf' leaves it unbounded above."""
    match = _BOUND_RE.match(text or "")
    if not match:
        raise InvalidFactError(f"bound must look like 'name=lo:hi', got {text!r}")
    name, low, high = match.groups()
    maximum = None if high in (None, "inf") else int(high)
    if maximum is not None and maximum < int(low):
        raise InvalidFactError(f"bound {text!r} is empty")
    return name, ParamBounds(int(low), maximum)
