# atlas/management/commands/atlas.py

from __future__ import annotations

from pathlib import Path

from atlas.api.serializers import ModuliComponentSerializer, VerificationReportSerializer
from atlas.services.registry import export_registry, query
from atlas.services.verifier import verify_registry
from backend.cli.base import SheafCommand
from backend.cli.formats import markdown_table, write_json_file


class Command(SheafCommand):
    help = (
        "Query the component registry by c1, c3 or label. With --verify, recompute "
        "every record's dimension from its ingredients and exit 1 on any mismatch."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--c1", type=int, choices=(-1, 0), help="Normalized c1.")
        parser.add_argument("--c3", type=int, help="c3.")
        parser.add_argument("--label", help="Exact record label, e.g. R(0,4,10)_1.")
        parser.add_argument("--verify", action="store_true", help="Run the registry verifier.")
        parser.add_argument("--out", help="Also write the JSON payload to this file.")
        parser.add_argument("--export", help="Write the selected records as registry JSON lines.")

    def handle(self, *args, **options):
        if options["verify"]:
            return self._verify(options)

        records = query(c1=options["c1"], c3=options["c3"], label=options["label"])
        if options["label"] and not records:
            self.invalid(f"no registry record labelled {options['label']!r}")
        payload = ModuliComponentSerializer(records, many=True).data
        if options["out"]:
            write_json_file(options["out"], payload)
        if options["export"]:
            path = Path(options["export"])
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(export_registry(records), encoding="utf-8")

        def markdown():
            return markdown_table(
                ["label", "dim", "spectrum", "flags", "citation"],
                [
                    (
                        r.label,
                        r.dim,
                        r.spectrum.label,
                        ", ".join(sorted(f.value for f in r.flags)),
                        r.citation,
                    )
                    for r in records
                ],
            )

        def plain():
            lines = []
            for r in records:
                spectrum = f" {r.spectrum.label}"
                flags = f" [{', '.join(sorted(f.value for f in r.flags))}]" if r.flags else ""
                tangent = f" tangent {r.tangent_dim}" if r.tangent_dim is not None else ""
                lines.append(f"{r.label}: dim {r.dim}{tangent}{spectrum}{flags}")
            lines.append(f"{len(records)} record(s)")
            return "\n".join(lines)

        self.emit(options["output_format"], data=lambda: payload, markdown=markdown, plain=plain)

    def _verify(self, options):
        report = verify_registry()
        if options["c1"] is not None or options["c3"] is not None or options["label"]:
            selected = query(c1=options["c1"], c3=options["c3"], label=options["label"])
            report = report.restricted({r.label for r in selected})
        payload = VerificationReportSerializer(report).data
        if options["out"]:
            write_json_file(options["out"], payload)

        def plain():
            if report.ok:
                return self.style.SUCCESS(f"[OK] {len(report.checks)} checks reproduced")
            return "\n".join(self.style.ERROR(f"[FAIL] {f}") for f in report.failures)

        def markdown():
            return markdown_table(
                ["label", "check", "ok", "expected", "actual"],
                [(c.label, c.check, c.ok, c.expected, c.actual) for c in report.checks],
            )

        self.emit(options["output_format"], data=lambda: payload, markdown=markdown, plain=plain)
        self._exit(not report.ok)
