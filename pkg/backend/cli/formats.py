# backend/cli/formats.py

"""
OUTPUT FORMATS

json      schema-stable, produced from DRF serializers
markdown  pipe tables
plain     [OK]/[FAIL] style lines
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Sequence

FORMAT_JSON = "json"
FORMAT_MARKDOWN = "markdown"
FORMAT_PLAIN = "plain"

OUTPUT_FORMATS = (FORMAT_JSON, FORMAT_MARKDOWN, FORMAT_PLAIN)


def render_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def write_json_file(path: str | Path, payload: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_json(payload) + "\n", encoding="utf-8")
    return path


def markdown_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    def cell(value: Any) -> str:
        return str(value).replace("|", "\\|")

    lines = [
        "| " + " | ".join(cell(h) for h in headers) + " |",
        "|" + "|".join("---" for _ in headers) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(cell(v) for v in row) + " |")
    return "\n".join(lines)
