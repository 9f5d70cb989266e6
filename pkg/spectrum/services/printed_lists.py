# spectrum/services/printed_lists.py

"""
PRINTED SPECTRUM LISTS

Loads the shipped spectrum lists for c2 = 4 and compares them with the
enumerator, c3 by c3, including which spectra are flagged unrealized.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from django.conf import settings
from jsonschema import Draft202012Validator

from spectrum.services.exceptions import InvalidSpectrumError
from spectrum.services.spectra import enumerate_spectra

logger = logging.getLogger("spectrum")

_INT_LIST = {"type": "array", "items": {"type": "integer"}, "minItems": 1}

PRINTED_LISTS_SCHEMA = {
    "type": "object",
    "required": ["source", "c2", "tables"],
    "properties": {
        "source": {"type": "string"},
        "c2": {"type": "integer", "minimum": 1},
        "tables": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c1", "rows", "unrealized"],
                "properties": {
                    "c1": {"enum": [-1, 0]},
                    "rows": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["c3", "spectra"],
                            "properties": {
                                "c3": {"type": "integer"},
                                "spectra": {"type": "array", "items": _INT_LIST},
                            },
                        },
                    },
                    "unrealized": {"type": "array", "items": _INT_LIST},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class PrintedList:
    c1: int
    c2: int
    by_c3: dict[int, frozenset[tuple[int, ...]]]
    unrealized: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.by_c3.values())


def load_printed_lists(path: Path | None = None) -> list[PrintedList]:
    path = Path(path or settings.SHEAVES["SPECTRA_GOLDEN"])
    document = json.loads(path.read_text(encoding="utf-8"))

    errors = sorted(Draft202012Validator(PRINTED_LISTS_SCHEMA).iter_errors(document), key=str)
    if errors:
        where = "/".join(str(p) for p in errors[0].absolute_path)
        raise InvalidSpectrumError(f"{path.name}: {errors[0].message} at /{where}")

    c2 = document["c2"]
    lists = []
    for table in document["tables"]:
        by_c3 = {
            row["c3"]: frozenset(tuple(sorted(s)) for s in row["spectra"])
            for row in table["rows"]
        }
        lists.append(
            PrintedList(
                c1=table["c1"],
                c2=c2,
                by_c3=by_c3,
                unrealized=frozenset(tuple(sorted(s)) for s in table["unrealized"]),
            )
        )
    logger.debug("spectra.printed_loaded", extra={"path": str(path), "tables": len(lists)})
    return lists


def compare_with_enumeration(printed: PrintedList) -> list[str]:
    """Human-readable mismatches; empty means exact agreement."""
    problems: list[str] = []
    c3_values = set(printed.by_c3)
    c3_values.update(range(0, max(c3_values, default=0) + 3))

    for c3 in sorted(c3_values):
        verdicts = enumerate_spectra(c1=printed.c1, c2=printed.c2, c3=c3)
        found = frozenset(v.spectrum.values for v in verdicts)
        expected = printed.by_c3.get(c3, frozenset())
        if found != expected:
            problems.append(
                f"c1={printed.c1} c3={c3}: enumerated {sorted(found)} but printed {sorted(expected)}"
            )
        flagged = frozenset(v.spectrum.values for v in verdicts if not v.realized)
        if flagged != (printed.unrealized & expected):
            problems.append(
                f"c1={printed.c1} c3={c3}: unrealized flags {sorted(flagged)} "
                f"but printed {sorted(printed.unrealized & expected)}"
            )
    return problems
