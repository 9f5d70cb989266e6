# cohomtable/services/tables.py

"""
COHOMOLOGY TABLES

Immutable four-row tables h^i(F(p)), i = 0..3, over an inclusive twist
range. Missing entries read as Unknown.

Parameters carry bounds; derived parameters (name -> expression over the
free ones) and excluded assignments describe the admissible strata.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping

from chow.services.chern import ChernTriple, euler_char
from cohomtable.services.entries import UNKNOWN, CohomEntry, Known, entry_expr
from cohomtable.services.exceptions import InstantiationError, InvalidTwistRangeError
from cohomtable.services.expressions import ParamExpr
from spectrum.services.spectra import Spectrum

ROWS = (0, 1, 2, 3)
SIGNS = {0: 1, 1: -1, 2: 1, 3: -1}

_RANGE_RE = re.compile(r"^\s*([+-]?\d+)\s*:\s*([+-]?\d+)\s*$")


@dataclass(frozen=True)
class TwistRange:
    start: int
    stop: int

    def __post_init__(self):
        if self.start > self.stop:
            raise InvalidTwistRangeError(f"empty twist range {self.start}:{self.stop}")

    @classmethod
    def parse(cls, text: str) -> TwistRange:
        match = _RANGE_RE.match(text or "")
        if not match:
            raise InvalidTwistRangeError(f"twist range must look like 'a:b', got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.start, self.stop + 1))

    def __contains__(self, p) -> bool:
        return isinstance(p, int) and self.start <= p <= self.stop

    def __len__(self) -> int:
        return self.stop - self.start + 1

    def __str__(self) -> str:
        return f"{self.start}:{self.stop}"


@dataclass(frozen=True)
class ParamBounds:
    minimum: int = 0
    maximum: int | None = None

    def __post_init__(self):
        if self.minimum < 0:
            raise InstantiationError("parameters are nonnegative")
        if self.maximum is not None and self.maximum < self.minimum:
            raise InstantiationError(f"empty bounds [{self.minimum}, {self.maximum}]")

    def admits(self, value: int) -> bool:
        return value >= self.minimum and (self.maximum is None or value <= self.maximum)

    def __str__(self) -> str:
        upper = "inf" if self.maximum is None else str(self.maximum)
        return f"[{self.minimum}, {upper}]"


def _frozen(mapping) -> Mapping:
    return MappingProxyType(dict(mapping or {}))


@dataclass(frozen=True)
class CohomologyTable:
    c1: int
    c2: int
    c3: int
    spectrum: Spectrum | None
    twists: TwistRange
    entries: Mapping[tuple[int, int], CohomEntry] = field(default_factory=dict)
    params: Mapping[str, ParamBounds] = field(default_factory=dict)
    derived: Mapping[str, ParamExpr] = field(default_factory=dict)
    excluded: tuple[Mapping[str, int], ...] = ()

    def __post_init__(self):
        filled = {(i, p): UNKNOWN for i in ROWS for p in self.twists}
        for (i, p), entry in dict(self.entries).items():
            if (i, p) not in filled:
                raise InvalidTwistRangeError(f"entry h{i}@{p} lies outside rows 0..3 / {self.twists}")
            filled[(i, p)] = entry
        object.__setattr__(self, "entries", _frozen(filled))
        object.__setattr__(self, "params", _frozen(self.params))
        object.__setattr__(self, "derived", _frozen(self.derived))
        object.__setattr__(self, "excluded", tuple(_frozen(e) for e in self.excluded))

    # --------------------------------------------------
    # ACCESS
    # --------------------------------------------------
    @property
    def triple(self) -> ChernTriple:
        return ChernTriple(2, self.c1, self.c2, self.c3)

    def entry(self, row: int, twist: int) -> CohomEntry:
        return self.entries[(row, twist)]

    def column(self, twist: int) -> tuple[CohomEntry, ...]:
        return tuple(self.entries[(i, twist)] for i in ROWS)

    def row(self, row: int) -> tuple[CohomEntry, ...]:
        return tuple(self.entries[(row, p)] for p in self.twists)

    def euler(self, twist: int) -> int:
        return euler_char(self.triple, twist)

    def entry_names(self) -> frozenset[str]:
        names: set[str] = set()
        for entry in self.entries.values():
            expr = entry_expr(entry)
            if expr is not None:
                names |= expr.names()
        return frozenset(names)

    @property
    def free_parameters(self) -> tuple[str, ...]:
        """Parameters that are not derived from others, sorted."""
        return tuple(sorted(set(self.params) - set(self.derived)))

    @property
    def is_fully_known(self) -> bool:
        return all(isinstance(e, Known) for e in self.entries.values())

    # --------------------------------------------------
    # STRATA
    # --------------------------------------------------
    def is_excluded(self, assignment: Mapping[str, int]) -> bool:
        return any(
            all(assignment.get(name) == value for name, value in combo.items())
            for combo in self.excluded
        )

    def with_derived(self, assignment: Mapping[str, int]) -> dict[str, int]:
        """The assignment extended by every derived parameter it determines."""
        full = dict(assignment)
        pending = dict(self.derived)
        while pending:
            ready = [n for n, e in pending.items() if e.names() <= set(full)]
            if not ready:
                missing = sorted(set().union(*(e.names() for e in pending.values())) - set(full))
                raise InstantiationError(f"derived parameters need values for {', '.join(missing)}")
            for name in ready:
                full[name] = pending.pop(name).evaluate(full)
        return full

    def assignments(self) -> Iterator[dict[str, int]]:
        """Every admissible assignment of the free parameters, derived values included."""
        names = self.free_parameters
        ranges = []
        for name in names:
            bounds = self.params[name]
            if bounds.maximum is None:
                raise InstantiationError(f"parameter {name} is unbounded; cannot enumerate strata")
            ranges.append(range(bounds.minimum, bounds.maximum + 1))
        for values in itertools.product(*ranges):
            assignment = dict(zip(names, values))
            if self.is_excluded(assignment):
                continue
            yield self.with_derived(assignment)


def column_identity_holds(table: CohomologyTable, twist: int) -> bool | None:
    """
    h0 - h1 + h2 - h3 == chi at the twist.

    None while any entry of the column is Unknown; parameters must cancel.
    """
    total = ParamExpr()
    for i, entry in zip(ROWS, table.column(twist)):
        expr = entry_expr(entry)
        if expr is None:
            return None
        total = total + SIGNS[i] * expr
    return total == table.euler(twist)
