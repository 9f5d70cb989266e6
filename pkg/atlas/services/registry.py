# atlas/services/registry.py

"""
COMPONENT REGISTRY

Loads the JSON-lines registry named by SHEAVES["REGISTRY_PATH"], one
record per line, each validated against schemas/registry_record.schema.json.
Blank lines and lines starting with '#' are skipped.
"""

from __future__ import annotations

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from django.conf import settings
from jsonschema import Draft202012Validator

from atlas.services.exceptions import AtlasServiceError, RegistryFormatError
from atlas.services.records import (
    ComponentFlag,
    ExtremalData,
    Ingredient,
    ModuliComponentRecord,
)
from spectrum.services.exceptions import SpectrumServiceError
from spectrum.services.spectra import Spectrum

logger = logging.getLogger("atlas")

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "schemas" / "registry_record.schema.json"


@lru_cache(maxsize=1)
def _validator() -> Draft202012Validator:
    return Draft202012Validator(json.loads(SCHEMA_PATH.read_text(encoding="utf-8")))


def parse_record(document: dict, *, origin: str = "<memory>") -> ModuliComponentRecord:
    errors = sorted(_validator().iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = "/".join(str(p) for p in first.absolute_path)
        raise RegistryFormatError(f"{origin}: {first.message} at /{where}")

    try:
        extremal = document.get("extremal")
        return ModuliComponentRecord(
            c1=document["c1"],
            c2=document["c2"],
            c3=document["c3"],
            label=document["label"],
            dim=document["dim"],
            citation=document["citation"],
            spectrum=Spectrum(tuple(document["spectrum"]), c1=document["c1"]),
            flags=frozenset(ComponentFlag(f) for f in document.get("flags", [])),
            tangent_dim=document.get("tangent_dim"),
            parent=document.get("parent"),
            ingredients=tuple(Ingredient.from_dict(i) for i in document.get("ingredients", [])),
            extremal=ExtremalData(**extremal) if extremal else None,
        )
    except (AtlasServiceError, SpectrumServiceError) as exc:
        raise RegistryFormatError(f"{origin}: {exc}") from exc


def parse_registry(lines: Iterable[str], *, origin: str = "<memory>") -> tuple[ModuliComponentRecord, ...]:
    records: list[ModuliComponentRecord] = []
    seen: set[str] = set()
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        where = f"{origin}:{number}"
        try:
            document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RegistryFormatError(f"{where}: {exc.msg}") from exc
        record = parse_record(document, origin=where)
        if record.label in seen:
            raise RegistryFormatError(f"{where}: duplicate label {record.label}")
        seen.add(record.label)
        records.append(record)

    labels = {r.label for r in records}
    for record in records:
        if record.parent and record.parent not in labels:
            raise RegistryFormatError(f"{origin}: {record.label} names unknown parent {record.parent}")
    return tuple(records)


@lru_cache(maxsize=4)
def load_registry(path: Path | str | None = None) -> tuple[ModuliComponentRecord, ...]:
    path = Path(path or settings.SHEAVES["REGISTRY_PATH"])
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RegistryFormatError(f"cannot read registry {path}: {exc}") from exc

    records = parse_registry(text.splitlines(), origin=path.name)
    logger.debug("atlas.registry_loaded", extra={"path": str(path), "records": len(records)})
    return records


def query(
    *,
    c1: int | None = None,
    c3: int | None = None,
    label: str | None = None,
    records: Sequence[ModuliComponentRecord] | None = None,
) -> list[ModuliComponentRecord]:
    """Records matching every given filter, in registry order."""
    pool = load_registry() if records is None else records
    return [
        r
        for r in pool
        if (c1 is None or r.c1 == c1) and (c3 is None or r.c3 == c3) and (label is None or r.label == label)
    ]


def export_registry(records: Sequence[ModuliComponentRecord]) -> str:
    """JSON lines in the shipped registry format; parse_registry reads it back."""
    return "".join(json.dumps(r.to_dict(), ensure_ascii=False) + "\n" for r in records)
