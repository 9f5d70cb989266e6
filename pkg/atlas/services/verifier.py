# atlas/services/verifier.py

"""
REGISTRY VERIFIER

Recomputes every number a record stands on and reports one check per
claim. Failures are data: the report lists them, nothing is raised for
a record that merely disagrees.

CHECKS
- spectrum: enumerated for (c1, c2, c3) and realized
- ingredient: serre / liaison / sum / lift values reproduce the dimension
- source: a nested ingredient reproduces dim C of its Serre family
- serre_twist: h0(omega_C(n)) recomputed from the Serre curve
- chern: a lift's resolution has Chern classes (c1, c2, c3)
- extremal: tangent dimension = expected + Ext^2, curve genus agrees
- parent: a subfamily is no larger than its parent, equal only when Open
- expected: top-level entries sit at the expected dimension unless Oversized
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from atlas.services.dimensions import (
    SerreFamilyInput,
    expected_dimension,
    lift_dimension,
    serre_family_dim,
)
from atlas.services.exceptions import AtlasServiceError
from atlas.services.records import (
    ComponentFlag,
    Ingredient,
    IngredientKind,
    ModuliComponentRecord,
)
from atlas.services.registry import load_registry
from chow.services.bundles import parse_bundle_term
from chow.services.chern import ChernTriple
from chow.services.exceptions import ChowServiceError
from chow.services.resolutions import resolution_chern
from curves.services.exceptions import CurveServiceError
from curves.services.extremal import SECTION_TWIST, extremal_genus, extremal_obstruction
from curves.services.serre import dualizing_twist, omega_sections, serre_curve
from liaison.services.linkage import linked_family_dim
from spectrum.services.spectra import enumerate_spectra

logger = logging.getLogger("atlas")

# the services whose domain errors turn into failed checks
_DOMAIN_ERRORS = (AtlasServiceError, ChowServiceError, CurveServiceError, ValueError)


@dataclass(frozen=True)
class VerificationCheck:
    label: str
    check: str
    ok: bool
    expected: str = ""
    actual: str = ""
    citation: str = ""

    def __str__(self) -> str:
        verdict = "ok" if self.ok else "FAILED"
        detail = f" (expected {self.expected}, got {self.actual})" if not self.ok else ""
        return f"{self.label} [{self.check}] {verdict}{detail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[VerificationCheck, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[VerificationCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def restricted(self, labels: set[str]) -> VerificationReport:
        """Checks of the named records only; they were still verified against the full registry."""
        return VerificationReport(tuple(c for c in self.checks if c.label in labels))


class _Collector:
    """Accumulates checks for one record."""

    def __init__(self, record: ModuliComponentRecord):
        self.record = record
        self.checks: list[VerificationCheck] = []

    def add(self, check: str, expected, actual) -> None:
        self.checks.append(
            VerificationCheck(
                label=self.record.label,
                check=check,
                ok=expected == actual,
                expected=str(expected),
                actual=str(actual),
                citation=self.record.citation,
            )
        )

    def error(self, check: str, expected, exc: Exception) -> None:
        self.checks.append(
            VerificationCheck(
                label=self.record.label,
                check=check,
                ok=False,
                expected=str(expected),
                actual=f"error: {exc}",
                citation=self.record.citation,
            )
        )


# ============================================================
# INGREDIENTS
# ============================================================


def ingredient_value(ingredient: Ingredient) -> int:
    """The dimension an ingredient yields on its own."""
    v = ingredient.values
    if ingredient.kind is IngredientKind.SERRE:
        return serre_family_dim(SerreFamilyInput(dim_curves=v[0], h0_omega=v[1], h0_Fk=v[2]))
    if ingredient.kind is IngredientKind.LIAISON:
        return linked_family_dim(dim_H=v[0], h0_C_s=v[1], h0_C_t=v[2], h0_C2_s=v[3], h0_C2_t=v[4])
    if ingredient.kind is IngredientKind.SUM:
        return sum(v)
    kernel = [parse_bundle_term(t) for t in ingredient.kernel]
    cover = [parse_bundle_term(t) for t in ingredient.cover]
    return lift_dimension(kernel, cover)


def _check_ingredient(out: _Collector, ingredient: Ingredient) -> None:
    record = out.record
    name = f"ingredient:{ingredient.kind.value}"
    try:
        out.add(name, record.dim, ingredient_value(ingredient))
    except _DOMAIN_ERRORS as exc:
        out.error(name, record.dim, exc)
        return

    if ingredient.source is not None:
        try:
            out.add("source", ingredient.values[0], ingredient_value(ingredient.source))
        except _DOMAIN_ERRORS as exc:
            out.error("source", ingredient.values[0], exc)

    if ingredient.serre_twist is not None:
        k = ingredient.serre_twist
        try:
            curve = serre_curve(c1=record.c1, c2=record.c2, c3=record.c3, k=k)
            out.add("serre_twist", ingredient.values[1], omega_sections(curve, dualizing_twist(record.c1, k)))
        except _DOMAIN_ERRORS as exc:
            out.error("serre_twist", ingredient.values[1], exc)

    if ingredient.kind is IngredientKind.LIFT:
        expected = ChernTriple(2, record.c1, record.c2, record.c3)
        try:
            actual = resolution_chern(
                positive=[parse_bundle_term(t) for t in ingredient.cover],
                negative=[parse_bundle_term(t) for t in ingredient.kernel],
            )
            out.add("chern", expected, actual)
        except _DOMAIN_ERRORS as exc:
            out.error("chern", expected, exc)


# ============================================================
# RECORD CHECKS
# ============================================================


def _check_spectrum(out: _Collector) -> None:
    record = out.record
    verdicts = enumerate_spectra(c1=record.c1, c2=record.c2, c3=record.c3)
    match = next((v for v in verdicts if v.spectrum == record.spectrum), None)
    if match is None:
        actual = "not enumerated"
    else:
        actual = "realized" if match.realized else "unrealized"
    out.add("spectrum", "realized", actual)


def _check_extremal(out: _Collector) -> None:
    record = out.record
    data = record.extremal
    if data is None:
        return
    try:
        expected = expected_dimension(record.c1, record.c2)
        obstruction = extremal_obstruction(data.c1, data.degree, data.len_z, data.xi_vanishes_on_z)
        curve = serre_curve(c1=record.c1, c2=record.c2, c3=record.c3, k=SECTION_TWIST)
        out.add("extremal_curve", (data.degree, extremal_genus(data.degree, data.len_z)), (curve.degree, curve.genus))
    except _DOMAIN_ERRORS as exc:
        out.error("extremal", record.tangent_dim, exc)
        return

    if obstruction.value is not None:
        out.add("extremal", expected + obstruction.value, record.tangent_dim)
    else:
        bound = expected + obstruction.upper_bound
        within = record.tangent_dim is not None and record.tangent_dim <= bound
        out.add("extremal", f"<= {bound}", f"<= {bound}" if within else record.tangent_dim)


def _check_parent(out: _Collector, by_label: dict[str, ModuliComponentRecord]) -> None:
    record = out.record
    if record.parent is None:
        return
    parent = by_label.get(record.parent)
    if parent is None:
        out.add("parent", record.parent, "missing")
        return
    if record.has(ComponentFlag.OPEN):
        out.add("parent", parent.dim, record.dim)
    else:
        out.add("parent", f"< {parent.dim}", f"< {parent.dim}" if record.dim < parent.dim else record.dim)


def _check_expected(out: _Collector) -> None:
    record = out.record
    if not record.is_component:
        return
    try:
        expected = expected_dimension(record.c1, record.c2)
    except AtlasServiceError as exc:
        out.error("expected", "anchored (c1, c2)", exc)
        return
    if record.has(ComponentFlag.OVERSIZED):
        out.add("expected", f"> {expected}", f"> {expected}" if record.dim > expected else record.dim)
    else:
        out.add("expected", expected, record.dim)


def verify_record(
    record: ModuliComponentRecord, by_label: dict[str, ModuliComponentRecord]
) -> list[VerificationCheck]:
    out = _Collector(record)
    _check_spectrum(out)
    for ingredient in record.ingredients:
        _check_ingredient(out, ingredient)
    _check_extremal(out)
    _check_parent(out, by_label)
    _check_expected(out)
    return out.checks


def verify_registry(records: Sequence[ModuliComponentRecord] | None = None) -> VerificationReport:
    records = load_registry() if records is None else records
    by_label = {r.label: r for r in records}

    checks: list[VerificationCheck] = []
    for record in records:
        checks.extend(verify_record(record, by_label))

    report = VerificationReport(tuple(checks))
    logger.info(
        "atlas.verified",
        extra={"records": len(records), "checks": len(checks), "failures": len(report.failures)},
    )
    for failure in report.failures:
        logger.warning("atlas.check_failed", extra={"label": failure.label, "check": failure.check})
    return report
