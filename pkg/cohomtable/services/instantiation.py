# cohomtable/services/instantiation.py

"""
INSTANTIATION

Evaluates every Param entry at an assignment of the table's parameters.
Derived parameters are computed from the assignment, never supplied.
"""

from __future__ import annotations

from typing import Mapping

from cohomtable.services.entries import UNKNOWN, Known, Param
from cohomtable.services.exceptions import InstantiationError, UnboundParameterError
from cohomtable.services.tables import CohomologyTable


def instantiate(table: CohomologyTable, assignment: Mapping[str, int]) -> CohomologyTable:
    for name, value in assignment.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise InstantiationError(f"{name} must be an integer, got {value!r}")
        if value < 0:
            raise InstantiationError(f"{name} must be nonnegative, got {value}")
        bounds = table.params.get(name)
        if bounds is not None and name not in table.derived and not bounds.admits(value):
            raise InstantiationError(f"{name}={value} lies outside {bounds}")

    if table.is_excluded(assignment):
        raise InstantiationError(f"assignment {dict(assignment)} lies in an excluded stratum")

    full = table.with_derived({k: v for k, v in assignment.items() if k not in table.derived})

    entries = {}
    for key, entry in table.entries.items():
        if not isinstance(entry, Param):
            entries[key] = entry
            continue
        try:
            value = entry.expr.evaluate(full)
        except UnboundParameterError as exc:
            raise InstantiationError(str(exc)) from exc
        if value < 0:
            row, twist = key
            raise InstantiationError(f"h{row}(F({twist})) = {entry} evaluates to {value}")
        entries[key] = Known(value)

    return CohomologyTable(
        c1=table.c1,
        c2=table.c2,
        c3=table.c3,
        spectrum=table.spectrum,
        twists=table.twists,
        entries=entries,
    )


def has_unknowns(table: CohomologyTable) -> bool:
    return any(e is UNKNOWN for e in table.entries.values())
