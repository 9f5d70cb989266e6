# cohomtable/services/diff.py

"""
TABLE DIFF

Compares two tables over the same twist range entry by entry.

Before comparing, parameters that only the first table uses are renamed to
the golden's names wherever a bare parameter faces a bare parameter, scanning
h1, h0, h2, h3 by ascending twist. Renaming is injective.

KINDS:
- value      Known against a different Known
- unknown    exactly one side Unknown
- parameter  anything else that disagrees (a parameter on either side)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from cohomtable.services.entries import UNKNOWN, CohomEntry, Param, entry_from_expr, entry_expr
from cohomtable.services.exceptions import DiffRangeError
from cohomtable.services.tables import CohomologyTable

KIND_VALUE = "value"
KIND_UNKNOWN = "unknown"
KIND_PARAMETER = "parameter"

SCAN_ORDER = (1, 0, 2, 3)


@dataclass(frozen=True)
class DiffEntry:
    row: int
    twist: int
    kind: str
    ours: str
    golden: str

    def __str__(self) -> str:
        return f"h{self.row}(F({self.twist})): {self.ours} vs {self.golden} [{self.kind}]"


@dataclass(frozen=True)
class DiffReport:
    entries: tuple[DiffEntry, ...] = ()
    renaming: dict[str, str] = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def canonical_renaming(t: CohomologyTable, golden: CohomologyTable) -> dict[str, str]:
    ours_only = t.entry_names() - golden.entry_names()
    renaming: dict[str, str] = {}
    for row in SCAN_ORDER:
        for p in t.twists:
            mine, theirs = t.entry(row, p), golden.entry(row, p)
            if not (isinstance(mine, Param) and isinstance(theirs, Param)):
                continue
            source, target = mine.name, theirs.name
            if source is None or target is None or source not in ours_only:
                continue
            if source in renaming or target in renaming.values():
                continue
            renaming[source] = target
    return renaming


def _renamed(entry: CohomEntry, renaming: dict[str, str]) -> CohomEntry:
    if not isinstance(entry, Param) or not renaming:
        return entry
    return entry_from_expr(entry.expr.rename(renaming))


def _kind(mine: CohomEntry, theirs: CohomEntry) -> str | None:
    if (mine is UNKNOWN) != (theirs is UNKNOWN):
        return KIND_UNKNOWN
    if mine is UNKNOWN:
        return None
    if entry_expr(mine) == entry_expr(theirs):
        return None
    if isinstance(mine, Param) or isinstance(theirs, Param):
        return KIND_PARAMETER
    return KIND_VALUE


def diff(t: CohomologyTable, golden: CohomologyTable) -> DiffReport:
    if t.twists != golden.twists:
        raise DiffRangeError(f"twist ranges differ: {t.twists} vs {golden.twists}")

    renaming = canonical_renaming(t, golden)
    entries = []
    for row in (0, 1, 2, 3):
        for p in t.twists:
            mine = _renamed(t.entry(row, p), renaming)
            theirs = golden.entry(row, p)
            kind = _kind(mine, theirs)
            if kind:
                entries.append(DiffEntry(row, p, kind, str(mine), str(theirs)))
    return DiffReport(tuple(entries), renaming)
