# cohomtable/management/commands/table.py

from __future__ import annotations

from backend.cli.base import SheafCommand
from backend.cli.formats import markdown_table
from cohomtable.api.serializers import (
    CohomologyTableSerializer,
    DiffReportSerializer,
    ReproductionReportSerializer,
)
from cohomtable.services.criteria import ext2_vanishes
from cohomtable.services.diff import diff
from cohomtable.services.facts import parse_bound, parse_facts
from cohomtable.services.golden import load_golden
from cohomtable.services.rendering import render_diff, render_markdown, render_plain
from cohomtable.services.reproduction import reproduce
from cohomtable.services.synthesis import synthesize
from cohomtable.services.tables import TwistRange
from spectrum.services.spectra import parse_spectrum


class Command(SheafCommand):
    help = (
        "Synthesize a cohomology table from a spectrum and facts, optionally diffing it "
        "against a golden table. With --golden alone, reproduce the golden at every "
        "allowed parameter assignment."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--c1", type=int, help="Normalized c1 (-1 or 0).")
        parser.add_argument("--c2", type=int, default=4, help="c2 (default 4).")
        parser.add_argument("--c3", type=int, help="c3.")
        parser.add_argument("--spectrum", help="Spectrum values, e.g. -2,-1,-1,-1.")
        parser.add_argument("--range", dest="twist_range", help="Inclusive twist range a:b.")
        parser.add_argument(
            "--fact",
            action="append",
            default=[],
            help="h<i>@<p>=<v> | reg=<r> | acm | param:h<i>@<p>=<expr> (repeatable).",
        )
        parser.add_argument(
            "--bound",
            action="append",
            default=[],
            help="Parameter bounds name=lo:hi (repeatable; default 0:inf).",
        )
        parser.add_argument("--golden", help="Shipped golden name (e.g. r0_10) or path to a golden file.")
        parser.add_argument(
            "--ext2",
            type=int,
            metavar="K",
            help="Also evaluate the unobstructedness criterion at regularity K.",
        )

    def handle(self, *args, **options):
        golden = load_golden(options["golden"]) if options["golden"] else None
        synth_args = (options["c1"], options["c3"], options["spectrum"], options["twist_range"])

        if golden is not None and all(a is None for a in synth_args):
            return self._reproduce(golden, options["output_format"])
        if any(a is None for a in synth_args):
            self.invalid("table needs --c1, --c3, --spectrum and --range (or --golden alone)")

        bounds = dict(parse_bound(text) for text in options["bound"])
        table = synthesize(
            c1=options["c1"],
            c2=options["c2"],
            c3=options["c3"],
            spectrum=parse_spectrum(options["spectrum"], c1=options["c1"]),
            twists=TwistRange.parse(options["twist_range"]),
            facts=parse_facts(options["fact"], bounds),
        )
        report = diff(table, golden.corrected_table()) if golden is not None else None
        criterion = ext2_vanishes(table, options["ext2"]) if options["ext2"] is not None else None

        def data():
            payload = {"table": CohomologyTableSerializer(table).data}
            if report is not None:
                payload["golden"] = golden.name
                payload["diff"] = DiffReportSerializer(report).data
            if options["ext2"] is not None:
                payload["ext2_vanishes"] = criterion
            return payload

        def markdown():
            parts = [render_markdown(table)]
            if report is not None:
                parts.append(
                    markdown_table(
                        ["row", "twist", "kind", "ours", "golden"],
                        [(f"h{e.row}", e.twist, e.kind, e.ours, e.golden) for e in report.entries],
                    )
                )
            if options["ext2"] is not None:
                parts.append(f"ext2 criterion at k={options['ext2']}: {criterion}")
            return "\n\n".join(parts)

        def plain():
            lines = [render_plain(table)]
            if report is not None:
                lines.append(f"diff against {golden.name}: {render_diff(report)}")
            if options["ext2"] is not None:
                lines.append(f"ext2 criterion at k={options['ext2']}: {criterion}")
            return "\n".join(lines)

        self.emit(options["output_format"], data=data, markdown=markdown, plain=plain)
        self._exit(bool(report))

    def _reproduce(self, golden, output_format):
        result = reproduce(golden)

        def plain():
            if result.ok:
                return self.style.SUCCESS(
                    f"[OK] {golden.name}: {len(result.outcomes)} assignment(s) reproduced"
                )
            return "\n".join(self.style.ERROR(f"[FAIL] {line}") for line in result.failures())

        def markdown():
            return markdown_table(
                ["assignment", "spectrum", "ok"],
                [(o.assignment or "{}", o.spectrum, o.ok) for o in result.outcomes],
            )

        self.emit(
            output_format,
            data=lambda: ReproductionReportSerializer(result).data,
            markdown=markdown,
            plain=plain,
        )
        self._exit(not result.ok)
