# cohomtable/services/synthesis.py

"""
TABLE SYNTHESIS (AUTHORITATIVE)

Fills h^i(F(p)) from what a normalized stable rank-2 reflexive sheaf
forces, then closes each column with the Euler characteristic.

ORDER:
1. Vanishing rules: h0 = 0 for p <= 0; h3 = 0 for p >= -4
2. Spectrum: h1 for p <= -1; h2 from -3 (c1 = 0) / -2 (c1 = -1) upwards
3. Facts: values, parameters, regularity, ACM
4. Closure per column:
   - nothing unknown   -> the alternating sum must equal chi
   - one unknown       -> solved from chi
   - h0, h1 unknown    -> h0 = max(chi', 0) + t_p, h1 = max(-chi', 0) + t_p
   - otherwise         -> left Unknown

Disagreements never get clipped: they raise TableContradictionError.
"""

from __future__ import annotations

import logging
from typing import Iterable

from cohomtable.services.entries import UNKNOWN, CohomEntry, Known, Param, entry_expr, entry_from_expr
from cohomtable.services.exceptions import SynthesisInputError, TableContradictionError
from cohomtable.services.expressions import ParamExpr
from cohomtable.services.facts import AcmFact, Fact, ParamFact, RegularityFact, ValueFact
from cohomtable.services.tables import ROWS, SIGNS, CohomologyTable, ParamBounds, TwistRange
from spectrum.services.cohomology_sums import (
    H1_MAX_TWIST,
    h1_from_spectrum,
    h2_from_spectrum,
    h2_min_twist,
)
from spectrum.services.spectra import Spectrum, is_admissible

logger = logging.getLogger("cohomtable")

H0_VANISHES_UP_TO = 0
H3_VANISHES_FROM = -4


def closure_parameter_name(twist: int) -> str:
    """t_2, t_0, t_m3: one fresh name per twist, stable across runs."""
    return f"t_{twist}" if twist >= 0 else f"t_m{-twist}"


class _Grid:
    """Mutable working copy; every write goes through put()."""

    def __init__(self, twists: TwistRange):
        self.twists = twists
        self.cells: dict[tuple[int, int], CohomEntry] = {(i, p): UNKNOWN for i in ROWS for p in twists}
        self.origin: dict[tuple[int, int], str] = {}

    def put(self, row: int, twist: int, entry: CohomEntry, source: str) -> None:
        key = (row, twist)
        if key not in self.cells:
            return
        current = self.cells[key]
        if current is UNKNOWN:
            self.cells[key] = entry
            self.origin[key] = source
            return
        if entry_expr(current) != entry_expr(entry):
            raise TableContradictionError(
                f"h{row}(F({twist})): {source} says {entry} but {self.origin[key]} says {current}",
                row=row,
                twist=twist,
            )

    def put_value(self, row: int, twist: int, value: int, source: str) -> None:
        if value < 0:
            raise TableContradictionError(
                f"h{row}(F({twist})) forced to {value} by {source}", row=row, twist=twist
            )
        self.put(row, twist, Known(value), source)


def _check_inputs(c1: int, c2: int, c3: int, spectrum: Spectrum) -> None:
    if spectrum.c1 != c1 or spectrum.c2 != c2:
        raise SynthesisInputError(
            f"spectrum {spectrum} (c1={spectrum.c1}, c2={spectrum.c2}) does not match c1={c1}, c2={c2}"
        )
    if not is_admissible(spectrum.values, c1=c1, c3=c3):
        raise SynthesisInputError(f"spectrum {spectrum} is not admissible for ({c1}, {c2}, {c3})")


def _apply_rules(grid: _Grid, spectrum: Spectrum) -> None:
    floor = h2_min_twist(spectrum.c1)
    for p in grid.twists:
        if p <= H0_VANISHES_UP_TO:
            grid.put_value(0, p, 0, "stability")
        if p >= H3_VANISHES_FROM:
            grid.put_value(3, p, 0, "stability")
        if p <= H1_MAX_TWIST:
            grid.put_value(1, p, h1_from_spectrum(spectrum, p), "spectrum")
        if p >= floor:
            grid.put_value(2, p, h2_from_spectrum(spectrum, p), "spectrum")


def _apply_facts(grid: _Grid, facts: Iterable[Fact], params: dict[str, ParamBounds]) -> None:
    for fact in facts:
        if isinstance(fact, (ValueFact, ParamFact)) and fact.twist not in grid.twists:
            raise SynthesisInputError(f"fact {fact} lies outside the twist range {grid.twists}")

        if isinstance(fact, ValueFact):
            grid.put_value(fact.row, fact.twist, fact.value, f"fact {fact}")
        elif isinstance(fact, ParamFact):
            for name, bounds in fact.bounds.items():
                params.setdefault(name, bounds)
            for name in fact.term.names():
                params.setdefault(name, ParamBounds())
            grid.put(fact.row, fact.twist, entry_from_expr(fact.expr), f"fact {fact}")
        elif isinstance(fact, RegularityFact):
            r = fact.regularity
            for p in grid.twists:
                for row in (1, 2, 3):
                    if p >= r - row:
                        grid.put_value(row, p, 0, f"fact {fact}")
        elif isinstance(fact, AcmFact):
            for p in grid.twists:
                grid.put_value(1, p, 0, f"fact {fact}")


def _close_column(grid: _Grid, twist: int, chi: int, params: dict[str, ParamBounds]) -> None:
    unknown = [i for i in ROWS if grid.cells[(i, twist)] is UNKNOWN]
    residual = ParamExpr.constant(chi)
    for i in ROWS:
        if i not in unknown:
            residual = residual - SIGNS[i] * entry_expr(grid.cells[(i, twist)])

    if not unknown:
        if residual != 0:
            raise TableContradictionError(
                f"column {twist}: alternating sum misses chi = {chi} by {residual}", twist=twist
            )
        return

    if len(unknown) == 1:
        row = unknown[0]
        solved = SIGNS[row] * residual
        if solved.is_constant:
            grid.put_value(row, twist, solved.value, "euler characteristic")
        else:
            grid.put(row, twist, entry_from_expr(solved), "euler characteristic")
        return

    if unknown == [0, 1] and residual.is_constant:
        chi_prime = residual.value
        name = closure_parameter_name(twist)
        params[name] = ParamBounds()
        grid.put(0, twist, Param(max(chi_prime, 0), ParamExpr.symbol(name)), "euler characteristic")
        grid.put(1, twist, Param(max(-chi_prime, 0), ParamExpr.symbol(name)), "euler characteristic")


def synthesize(
    *,
    c1: int,
    c2: int,
    c3: int,
    spectrum: Spectrum,
    twists: TwistRange,
    facts: Iterable[Fact] = (),
) -> CohomologyTable:
    _check_inputs(c1, c2, c3, spectrum)
    facts = list(facts)
    grid = _Grid(twists)
    params: dict[str, ParamBounds] = {}

    probe = CohomologyTable(c1=c1, c2=c2, c3=c3, spectrum=spectrum, twists=twists)
    try:
        _apply_rules(grid, spectrum)
        _apply_facts(grid, facts, params)
        for p in twists:
            _close_column(grid, p, probe.euler(p), params)
    except TableContradictionError as exc:
        logger.warning(
            "cohomtable.contradiction",
            extra={
                "c1": c1,
                "c2": c2,
                "c3": c3,
                "spectrum": spectrum.label,
                "facts": [str(f) for f in facts],
                "detail": str(exc),
            },
        )
        raise

    return CohomologyTable(
        c1=c1,
        c2=c2,
        c3=c3,
        spectrum=spectrum,
        twists=twists,
        entries=grid.cells,
        params=params,
    )
