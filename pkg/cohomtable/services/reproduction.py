# cohomtable/services/reproduction.py

"""
GOLDEN REPRODUCTION

For every admissible assignment of a golden table's free parameters:
pick the spectrum, synthesize with the golden's facts, and compare both
tables instantiated at that assignment.

Also checks that each erratum's printed value breaks the column identity
for some assignment while the correction holds for all of them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from cohomtable.services.diff import DiffReport, diff
from cohomtable.services.exceptions import CohomTableServiceError
from cohomtable.services.golden import GoldenTable
from cohomtable.services.instantiation import instantiate
from cohomtable.services.synthesis import synthesize
from cohomtable.services.tables import column_identity_holds

logger = logging.getLogger("cohomtable")


@dataclass(frozen=True)
class AssignmentOutcome:
    assignment: dict[str, int]
    spectrum: str
    report: DiffReport | None = None
    error: str = ""
    underdetermined: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.error and not self.underdetermined and self.report is not None and not self.report


@dataclass(frozen=True)
class ErratumCheck:
    row: int
    twist: int
    printed: str
    corrected: str
    printed_breaks_identity: bool
    corrected_holds: bool

    @property
    def ok(self) -> bool:
        return self.printed_breaks_identity and self.corrected_holds


@dataclass(frozen=True)
class ReproductionReport:
    golden: str
    outcomes: tuple[AssignmentOutcome, ...] = ()
    errata: tuple[ErratumCheck, ...] = ()
    problems: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return (
            not self.problems
            and all(o.ok for o in self.outcomes)
            and all(e.ok for e in self.errata)
        )

    def failures(self) -> list[str]:
        lines = list(self.problems)
        for o in self.outcomes:
            if o.ok:
                continue
            where = f"{self.golden} {o.assignment or '{}'} {o.spectrum}"
            if o.error:
                lines.append(f"{where}: {o.error}")
            if o.underdetermined:
                lines.append(f"{where}: left free {', '.join(o.underdetermined)}")
            for entry in o.report.entries if o.report else ():
                lines.append(f"{where}: {entry}")
        for e in self.errata:
            if not e.printed_breaks_identity:
                lines.append(f"{self.golden}: printed h{e.row}@{e.twist}={e.printed} is consistent")
            if not e.corrected_holds:
                lines.append(f"{self.golden}: corrected h{e.row}@{e.twist}={e.corrected} breaks chi")
        return lines


def _reproduce_one(golden: GoldenTable, assignment: dict[str, int]) -> AssignmentOutcome:
    spectrum = golden.spectrum_for(assignment)
    try:
        ours = synthesize(
            c1=golden.c1,
            c2=golden.c2,
            c3=golden.c3,
            spectrum=spectrum,
            twists=golden.twists,
            facts=golden.facts(),
        )
        free = tuple(sorted(ours.entry_names() - set(assignment)))
        if free:
            return AssignmentOutcome(assignment, spectrum.label, underdetermined=free)
        report = diff(instantiate(ours, assignment), instantiate(golden.corrected_table(), assignment))
    except CohomTableServiceError as exc:
        return AssignmentOutcome(assignment, spectrum.label, error=str(exc))
    return AssignmentOutcome(assignment, spectrum.label, report=report)


def _check_errata(golden: GoldenTable, assignments: list[dict[str, int]]) -> list[ErratumCheck]:
    checks = []
    corrected = golden.corrected_table()
    for erratum in golden.errata:
        breaks, holds = False, True
        cells = dict(golden.printed)
        for other in golden.errata:
            if other is not erratum:
                cells[(other.row, other.twist)] = other.corrected
        mixed = golden.table_from(cells)
        for assignment in assignments:
            if column_identity_holds(instantiate(mixed, assignment), erratum.twist) is False:
                breaks = True
            if column_identity_holds(instantiate(corrected, assignment), erratum.twist) is not True:
                holds = False
        checks.append(
            ErratumCheck(
                row=erratum.row,
                twist=erratum.twist,
                printed=str(erratum.printed),
                corrected=str(erratum.corrected),
                printed_breaks_identity=breaks,
                corrected_holds=holds,
            )
        )
    return checks


def reproduce(golden: GoldenTable) -> ReproductionReport:
    try:
        assignments = list(golden.corrected_table().assignments())
    except CohomTableServiceError as exc:
        return ReproductionReport(golden.name, problems=(f"{golden.name}: {exc}",))

    outcomes = tuple(_reproduce_one(golden, a) for a in assignments)
    report = ReproductionReport(
        golden=golden.name,
        outcomes=outcomes,
        errata=tuple(_check_errata(golden, assignments)),
    )
    if not report.ok:
        logger.warning(
            "cohomtable.reproduction_failed",
            extra={"golden": golden.name, "failures": report.failures()},
        )
    return report
