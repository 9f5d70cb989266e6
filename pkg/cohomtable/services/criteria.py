# cohomtable/services/criteria.py

"""
TABLE CRITERIA

Read-only predicates over a table. Each returns None when an entry it
needs is Unknown, a parameter, or outside the twist range.
"""

from __future__ import annotations

from cohomtable.services.entries import Known
from cohomtable.services.tables import CohomologyTable


def _known_zero(table: CohomologyTable, row: int, twist: int) -> bool | None:
    if twist not in table.twists:
        return None
    entry = table.entry(row, twist)
    if not isinstance(entry, Known):
        return None
    return entry.value == 0


def _all_zero(table: CohomologyTable, cells: list[tuple[int, int]]) -> bool | None:
    verdicts = [_known_zero(table, row, twist) for row, twist in cells]
    if False in verdicts:
        return False
    if None in verdicts:
        return None
    return True


def is_regular(table: CohomologyTable, k: int) -> bool | None:
    """Castelnuovo-Mumford: h1(F(k-1)) = h2(F(k-2)) = h3(F(k-3)) = 0."""
    return _all_zero(table, [(1, k - 1), (2, k - 2), (3, k - 3)])


def ext2_vanishes(table: CohomologyTable, k: int) -> bool | None:
    """
    Unobstructedness: F k-regular with h0(F(k-3)) = h1(F(k-4)) = 0
    forces Ext^2(F, F) = 0.

    False means the criterion does not apply, not that Ext^2 is nonzero.
    """
    return _all_zero(table, [(1, k - 1), (2, k - 2), (3, k - 3), (0, k - 3), (1, k - 4)])
