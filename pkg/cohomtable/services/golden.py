# cohomtable/services/golden.py

"""
GOLDEN TABLES

Loads the printed cohomology tables shipped under SHEAVES["GOLDEN_DIR"].

FILE CONTRACT (validated by schemas/golden_table.schema.json):
- rows hold the values exactly as printed (integers or expressions)
- errata correct misprints; corrected_table() applies them
- spectra may depend on parameters: [{"when": {"m": 0}, "values": [...]}]
- derived parameters are expressions over the free ones
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from django.conf import settings
from jsonschema import Draft202012Validator

from cohomtable.services.entries import CohomEntry, entry_from_expr
from cohomtable.services.exceptions import CohomTableServiceError, GoldenFormatError
from cohomtable.services.expressions import ParamExpr
from cohomtable.services.facts import Fact, parse_facts
from cohomtable.services.tables import CohomologyTable, ParamBounds, TwistRange
from spectrum.services.spectra import Spectrum

logger = logging.getLogger("cohomtable")

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "golden_table.schema.json"


@lru_cache(maxsize=1)
def _validator() -> Draft202012Validator:
    return Draft202012Validator(json.loads(SCHEMA_PATH.read_text(encoding="utf-8")))


@dataclass(frozen=True)
class Erratum:
    row: int
    twist: int
    printed: ParamExpr
    corrected: ParamExpr
    reason: str


@dataclass(frozen=True)
class GoldenTable:
    name: str
    source: str
    c1: int
    c2: int
    c3: int
    twists: TwistRange
    spectra: tuple[tuple[Mapping[str, int], Spectrum], ...]
    printed: Mapping[tuple[int, int], ParamExpr]
    params: Mapping[str, ParamBounds] = field(default_factory=dict)
    derived: Mapping[str, ParamExpr] = field(default_factory=dict)
    excluded: tuple[Mapping[str, int], ...] = ()
    fact_texts: tuple[str, ...] = ()
    errata: tuple[Erratum, ...] = ()

    # --------------------------------------------------
    # SPECTRA
    # --------------------------------------------------
    @property
    def single_spectrum(self) -> Spectrum | None:
        distinct = {s for _, s in self.spectra}
        return distinct.pop() if len(distinct) == 1 else None

    def spectrum_for(self, assignment: Mapping[str, int]) -> Spectrum:
        for when, spectrum in self.spectra:
            if all(assignment.get(n) == v for n, v in when.items()):
                return spectrum
        raise GoldenFormatError(f"{self.name}: no spectrum declared for {dict(assignment)}")

    # --------------------------------------------------
    # TABLES
    # --------------------------------------------------
    def facts(self) -> list[Fact]:
        return parse_facts(self.fact_texts, self.params)

    def table_from(self, cells: Mapping[tuple[int, int], ParamExpr]) -> CohomologyTable:
        entries: dict[tuple[int, int], CohomEntry] = {
            key: entry_from_expr(expr) for key, expr in cells.items()
        }
        return CohomologyTable(
            c1=self.c1,
            c2=self.c2,
            c3=self.c3,
            spectrum=self.single_spectrum,
            twists=self.twists,
            entries=entries,
            params=self.params,
            derived=self.derived,
            excluded=self.excluded,
        )

    def printed_table(self) -> CohomologyTable:
        return self.table_from(self.printed)

    def corrected_table(self) -> CohomologyTable:
        cells = dict(self.printed)
        for erratum in self.errata:
            cells[(erratum.row, erratum.twist)] = erratum.corrected
        return self.table_from(cells)


# ============================================================
# LOADING
# ============================================================


def _expr(value, where: str) -> ParamExpr:
    try:
        return ParamExpr.coerce(value)
    except CohomTableServiceError as exc:
        raise GoldenFormatError(f"{where}: {exc}") from exc


def parse_golden(document: dict, *, origin: str = "<memory>") -> GoldenTable:
    errors = sorted(_validator().iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = "/".join(str(p) for p in first.absolute_path)
        raise GoldenFormatError(f"{origin}: {first.message} at /{where}")

    start, stop = document["range"]
    twists = TwistRange(start, stop)
    c1 = document["c1"]

    printed: dict[tuple[int, int], ParamExpr] = {}
    for row in range(4):
        values = document["rows"][f"h{row}"]
        if len(values) != len(twists):
            raise GoldenFormatError(
                f"{origin}: row h{row} has {len(values)} entries for range {twists}"
            )
        for p, value in zip(twists, values):
            printed[(row, p)] = _expr(value, f"{origin} h{row}@{p}")

    if "spectrum" in document:
        spectra = (({}, Spectrum(tuple(document["spectrum"]), c1=c1)),)
    else:
        spectra = tuple(
            (dict(item["when"]), Spectrum(tuple(item["values"]), c1=c1)) for item in document["spectra"]
        )

    params = {
        name: ParamBounds(spec["min"], spec.get("max"))
        for name, spec in document.get("params", {}).items()
    }
    derived = {
        name: _expr(text, f"{origin} derived {name}") for name, text in document.get("derived", {}).items()
    }
    for name in derived:
        params.setdefault(name, ParamBounds())

    errata = []
    for item in document.get("errata", []):
        key = (item["row"], item["twist"])
        erratum = Erratum(
            row=item["row"],
            twist=item["twist"],
            printed=_expr(item["printed"], f"{origin} erratum"),
            corrected=_expr(item["corrected"], f"{origin} erratum"),
            reason=item["reason"],
        )
        if printed.get(key) != erratum.printed:
            raise GoldenFormatError(
                f"{origin}: erratum at h{key[0]}@{key[1]} quotes {erratum.printed}, "
                f"the row holds {printed.get(key)}"
            )
        errata.append(erratum)

    golden = GoldenTable(
        name=document["name"],
        source=document["source"],
        c1=c1,
        c2=document["c2"],
        c3=document["c3"],
        twists=twists,
        spectra=spectra,
        printed=printed,
        params=params,
        derived=derived,
        excluded=tuple(dict(e) for e in document.get("excluded", [])),
        fact_texts=tuple(document.get("facts", [])),
        errata=tuple(errata),
    )

    unknown_names = golden.printed_table().entry_names() - set(params)
    if unknown_names:
        raise GoldenFormatError(f"{origin}: undeclared parameters {sorted(unknown_names)}")
    return golden


def golden_dir() -> Path:
    return Path(settings.SHEAVES["GOLDEN_DIR"])


def golden_names() -> list[str]:
    return sorted(p.stem for p in golden_dir().glob("*.json"))


def load_golden(name_or_path: str | Path) -> GoldenTable:
    """A shipped golden by name ('r0_8') or any golden file by path."""
    candidate = Path(name_or_path)
    if candidate.suffix != ".json" or not candidate.exists():
        candidate = golden_dir() / f"{name_or_path}.json"
    if not candidate.exists():
        raise GoldenFormatError(f"no golden table {name_or_path!r} (looked in {golden_dir()})")
    try:
        document = json.loads(candidate.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GoldenFormatError(f"{candidate.name}: invalid JSON ({exc})") from exc
    golden = parse_golden(document, origin=candidate.name)
    logger.debug("cohomtable.golden_loaded", extra={"golden": golden.name, "path": str(candidate)})
    return golden


def load_all_goldens() -> list[GoldenTable]:
    return [load_golden(name) for name in golden_names()]
