# cohomtable/services/rendering.py

"""
TABLE RENDERING
"""

from __future__ import annotations

from backend.cli.formats import markdown_table
from cohomtable.services.diff import DiffReport
from cohomtable.services.tables import ROWS, CohomologyTable


def _title(table: CohomologyTable) -> str:
    spectrum = table.spectrum.label if table.spectrum else "(by stratum)"
    return f"({table.c1}, {table.c2}, {table.c3}) spectrum {spectrum}"


def _params_line(table: CohomologyTable) -> str:
    parts = [f"{name} in {bounds}" for name, bounds in sorted(table.params.items())]
    parts += [f"{name} = {expr}" for name, expr in sorted(table.derived.items())]
    return "; ".join(parts)


def render_markdown(table: CohomologyTable) -> str:
    headers = ["", *(str(p) for p in table.twists)]
    rows = [[f"h{i}(F(p))", *(str(e) for e in table.row(i))] for i in ROWS]
    lines = [f"**{_title(table)}**", "", markdown_table(headers, rows)]
    params = _params_line(table)
    if params:
        lines += ["", params]
    return "\n".join(lines)


def render_plain(table: CohomologyTable) -> str:
    cells = [["p", *(str(p) for p in table.twists)]]
    cells += [[f"h{i}", *(str(e) for e in table.row(i))] for i in ROWS]
    widths = [max(len(row[c]) for row in cells) for c in range(len(cells[0]))]
    lines = [_title(table)]
    lines += ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells]
    params = _params_line(table)
    if params:
        lines.append(params)
    return "\n".join(lines)


def render_diff(report: DiffReport) -> str:
    if not report:
        return "no differences"
    lines = [str(entry) for entry in report.entries]
    if report.renaming:
        renamed = ", ".join(f"{a}->{b}" for a, b in sorted(report.renaming.items()))
        lines.append(f"renamed: {renamed}")
    return "\n".join(lines)
