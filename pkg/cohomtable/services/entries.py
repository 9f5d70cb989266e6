# cohomtable/services/entries.py

"""
TABLE ENTRIES

An entry of a cohomology table is exactly one of:
- Known(value)        a nonnegative integer
- Param(base, term)   base + term, term a parameter expression without constant
- Unknown             nothing the rules can say
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from cohomtable.services.exceptions import InvalidEntryError
from cohomtable.services.expressions import ParamExpr


@dataclass(frozen=True)
class Known:
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise InvalidEntryError(f"known entries are integers, got {self.value!r}")
        if self.value < 0:
            raise InvalidEntryError(f"known entries are nonnegative, got {self.value}")

    @property
    def expr(self) -> ParamExpr:
        return ParamExpr.constant(self.value)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Param:
    base: int
    term: ParamExpr

    def __post_init__(self):
        term = ParamExpr.coerce(self.term)
        if term.constant_term:
            raise InvalidEntryError(f"parameter term {term} carries a constant; move it to base")
        if term.is_constant:
            raise InvalidEntryError("a parameter entry needs at least one parameter")
        object.__setattr__(self, "term", term)

    @property
    def expr(self) -> ParamExpr:
        return self.term + self.base

    @property
    def name(self) -> str | None:
        return self.term.symbol_name

    def __str__(self) -> str:
        return str(self.expr)


class _Unknown:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __str__(self) -> str:
        return "?"

    def __reduce__(self):
        return (_Unknown, ())


UNKNOWN = _Unknown()

CohomEntry = Union[Known, Param, _Unknown]


def is_unknown(entry: CohomEntry) -> bool:
    return entry is UNKNOWN


def entry_from_expr(expr: ParamExpr | int | str) -> Known | Param:
    """Known for constant expressions, Param otherwise."""
    expr = ParamExpr.coerce(expr)
    if expr.is_constant:
        return Known(expr.value)
    return Param(expr.constant_term, expr.without_constant())


def entry_expr(entry: CohomEntry) -> ParamExpr | None:
    if entry is UNKNOWN:
        return None
    return entry.expr


def render_entry(entry: CohomEntry) -> str:
    return str(entry)
