# atlas/management/commands/check_corpus.py

from __future__ import annotations

from atlas.api.serializers import CorpusCheckSerializer
from atlas.services.golden_corpus import run_corpus
from backend.cli.base import SheafCommand
from backend.cli.formats import markdown_table, write_json_file


class Command(SheafCommand):
    help = (
        "Run every golden check (spectra, Euler characteristics, resolutions, Serre "
        "curves, cohomology tables, extremal profiles, unobstructedness, registry). "
        "Exit 1 if anything disagrees."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--out", help="Also write the JSON report to this file.")

    def handle(self, *args, **options):
        report = run_corpus()
        payload = {
            "ok": report.ok,
            "sections": {name: {"passed": p, "total": t} for name, (p, t) in report.sections().items()},
            "failures": CorpusCheckSerializer(report.failures, many=True).data,
        }
        if options["out"]:
            write_json_file(options["out"], payload)

        def plain():
            lines = []
            for name, (passed, total) in report.sections().items():
                line = f"{name}: {passed}/{total}"
                lines.append(self.style.SUCCESS(f"[OK] {line}") if passed == total else self.style.ERROR(f"[FAIL] {line}"))
            for check in report.failures:
                lines.append(self.style.ERROR(f"[FAIL] {check.section} {check.name}: {check.detail}"))
            return "\n".join(lines)

        def markdown():
            return markdown_table(
                ["section", "passed", "total"],
                [(name, p, t) for name, (p, t) in report.sections().items()],
            )

        self.emit(options["output_format"], data=lambda: payload, markdown=markdown, plain=plain)
        self._exit(not report.ok)
