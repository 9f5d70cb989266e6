# atlas/services/golden_corpus.py

"""
GOLDEN CORPUS

One run over every shipped reference number:
- spectra      enumerator vs the printed lists
- hrr          euler_char vs the hand-expanded polynomials
- resolutions  Chern classes and lift dimensions of the resolution anchors
- serre        Serre curve classes of the sheaves the registry counts
- goldens      every printed cohomology table reproduced by synthesis
- extremal     printed h1 rows of the extremal strata vs the closed form
- ext2         unobstructedness criterion on the strata claimed smooth
- registry     the component registry verifier
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping

from atlas.services.dimensions import lift_dimension
from atlas.services.verifier import verify_registry
from chow.services.bundles import BundleTerm
from chow.services.chern import ChernTriple, euler_char
from chow.services.hrr import hrr_reference
from chow.services.resolutions import resolution_chern
from cohomtable.services.criteria import ext2_vanishes
from cohomtable.services.entries import Known
from cohomtable.services.exceptions import CohomTableServiceError
from cohomtable.services.golden import load_all_goldens, load_golden
from cohomtable.services.instantiation import instantiate
from cohomtable.services.reproduction import reproduce
from curves.services.extremal import extremal_sheaf_h1
from curves.services.serre import serre_curve
from spectrum.services.printed_lists import compare_with_enumeration, load_printed_lists

logger = logging.getLogger("atlas")

O = BundleTerm.line
T = BundleTerm.tangent

HRR_TWISTS = range(-6, 7)
HRR_C3 = range(0, 17, 2)

# (kernel, cover, (c1, c2, c3), lift dimension)
RESOLUTION_ANCHORS = (
    ((T(-4), O(-3)), (O(-1), O(-2, 5)), (0, 4, 10), 29),
    ((T(-4, 2),), (O(-2, 8),), (0, 4, 8), 29),
    ((O(-3, 2),), (O(-2, 2), O(-1, 2)), (0, 4, 12), 29),
    ((O(-3, 3),), (O(-2, 5),), (-1, 4, 10), 27),
    ((O(-4),), (O(-1), O(-2, 2)), (-1, 4, 12), 27),
)

# ((c1, c2, c3), k) -> (degree, genus)
SERRE_ANCHORS = {
    ((0, 4, 8), 1): (5, 0),
    ((0, 4, 10), 1): (5, 1),
    ((0, 4, 12), 1): (5, 2),
    ((-1, 4, 8), 1): (4, -1),
    ((-1, 4, 8), 2): (6, 2),
    ((-1, 4, 10), 1): (4, 0),
    ((-1, 4, 10), 2): (6, 3),
}

# golden, assignment, (c1, d, len Z)
EXTREMAL_PROFILES = (
    ("r0_12", {"l": 1}, (0, 5, 1)),
    ("rm1_8", {"l": 1, "m": 1, "k": 1}, (-1, 4, 2)),
    ("rm1_10", {"l": 1, "m": 1}, (-1, 4, 1)),
)

# golden, assignments (None: all of them) whose sheaves are unobstructed
UNOBSTRUCTED_STRATA = (
    ("r0_8", [{"l": 0, "m": 0}]),
    ("r0_10", None),
    ("r0_12", [{"l": 0}]),
    ("rm1_8", [{"l": 0, "m": 0, "k": 0}]),
    ("rm1_10", [{"l": 0, "m": 0}, {"l": 0, "m": 1}]),
    ("rm1_12", None),
)
UNOBSTRUCTED_REGULARITY = 3


@dataclass(frozen=True)
class CorpusCheck:
    section: str
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class CorpusReport:
    checks: tuple[CorpusCheck, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[CorpusCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def sections(self) -> dict[str, tuple[int, int]]:
        """section -> (passed, total)"""
        out: dict[str, tuple[int, int]] = {}
        for c in self.checks:
            passed, total = out.get(c.section, (0, 0))
            out[c.section] = (passed + c.ok, total + 1)
        return out


# ============================================================
# SECTIONS
# ============================================================


def _spectra() -> Iterable[CorpusCheck]:
    for printed in load_printed_lists():
        problems = compare_with_enumeration(printed)
        yield CorpusCheck("spectra", f"c1={printed.c1}", not problems, "; ".join(problems))


def _hrr() -> Iterable[CorpusCheck]:
    for c1 in (0, -1):
        mismatches = [
            f"c3={c3} l={l}"
            for c3 in HRR_C3
            for l in HRR_TWISTS  # noqa: E741
            if euler_char(ChernTriple(2, c1, 4, c3), l) != hrr_reference(c1, c3, l)
        ]
        yield CorpusCheck("hrr", f"c1={c1}", not mismatches, ", ".join(mismatches))


def _resolutions() -> Iterable[CorpusCheck]:
    for kernel, cover, (c1, c2, c3), dim in RESOLUTION_ANCHORS:
        name = f"R({c1},{c2},{c3})"
        chern = resolution_chern(positive=cover, negative=kernel)
        yield CorpusCheck(
            "resolutions", f"{name} chern", chern == ChernTriple(2, c1, c2, c3), str(chern)
        )
        lifted = lift_dimension(kernel, cover)
        yield CorpusCheck("resolutions", f"{name} dim", lifted == dim, f"expected {dim}, got {lifted}")


def _serre() -> Iterable[CorpusCheck]:
    for ((c1, c2, c3), k), expected in SERRE_ANCHORS.items():
        curve = serre_curve(c1=c1, c2=c2, c3=c3, k=k)
        actual = (curve.degree, curve.genus)
        yield CorpusCheck(
            "serre", f"({c1},{c2},{c3}) k={k}", actual == expected, f"expected {expected}, got {actual}"
        )


def _goldens() -> Iterable[CorpusCheck]:
    for golden in load_all_goldens():
        report = reproduce(golden)
        yield CorpusCheck("goldens", golden.name, report.ok, "; ".join(report.failures()))


def _h1_row(name: str, assignment: Mapping[str, int]) -> dict[int, int | None]:
    table = instantiate(load_golden(name).corrected_table(), assignment)
    row = {}
    for t in table.twists:
        entry = table.entry(1, t)
        row[t] = entry.value if isinstance(entry, Known) else None
    return row


def _extremal() -> Iterable[CorpusCheck]:
    for name, assignment, (c1, d, len_z) in EXTREMAL_PROFILES:
        label = f"{name} {assignment}"
        try:
            printed = _h1_row(name, assignment)
        except CohomTableServiceError as exc:
            yield CorpusCheck("extremal", label, False, str(exc))
            continue
        closed = {t: extremal_sheaf_h1(c1, d, len_z, t) for t in printed}
        yield CorpusCheck("extremal", label, printed == closed, f"printed {printed}, closed form {closed}")


def _ext2() -> Iterable[CorpusCheck]:
    for name, assignments in UNOBSTRUCTED_STRATA:
        table = load_golden(name).corrected_table()
        pool = list(table.assignments()) if assignments is None else assignments
        for assignment in pool:
            label = f"{name} {assignment or '{}'}"
            try:
                verdict = ext2_vanishes(instantiate(table, assignment), UNOBSTRUCTED_REGULARITY)
            except CohomTableServiceError as exc:
                yield CorpusCheck("ext2", label, False, str(exc))
                continue
            yield CorpusCheck("ext2", label, verdict is True, f"criterion gave {verdict}")


def _registry() -> Iterable[CorpusCheck]:
    report = verify_registry()
    yield CorpusCheck(
        "registry",
        f"{len(report.checks)} checks",
        report.ok,
        "; ".join(str(f) for f in report.failures),
    )


SECTIONS = (
    ("spectra", _spectra),
    ("hrr", _hrr),
    ("resolutions", _resolutions),
    ("serre", _serre),
    ("goldens", _goldens),
    ("extremal", _extremal),
    ("ext2", _ext2),
    ("registry", _registry),
)


def run_corpus() -> CorpusReport:
    checks: list[CorpusCheck] = []
    for _, section in SECTIONS:
        checks.extend(section())

    report = CorpusReport(tuple(checks))
    logger.info(
        "atlas.corpus",
        extra={"checks": len(checks), "failures": len(report.failures), "ok": report.ok},
    )
    return report
