# spectrum/management/commands/spectra.py

from __future__ import annotations

from django.conf import settings

from backend.cli.base import SheafCommand
from backend.cli.formats import markdown_table
from spectrum.api.serializers import ExclusionRecordSerializer, SpectrumVerdictSerializer
from spectrum.services.exclusions import exclusion_records
from spectrum.services.spectra import enumerate_spectra


class Command(SheafCommand):
    help = "Enumerate admissible spectra for (c1, c2, c3), flagging unrealized ones."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--c1", type=int, required=True, help="Normalized c1 (-1 or 0).")
        parser.add_argument("--c2", type=int, required=True, help="c2 (>= 1).")
        parser.add_argument("--c3", type=int, required=True, help="c3.")
        parser.add_argument(
            "--exclusions",
            action="store_true",
            help="Also print the registry of admissible-but-unrealized spectra.",
        )

    def handle(self, *args, **options):
        c1, c2, c3 = options["c1"], options["c2"], options["c3"]
        verdicts = enumerate_spectra(
            c1=c1, c2=c2, c3=c3, max_c2=settings.SHEAVES["MAX_C2"]
        )

        def data():
            payload = {
                "c1": c1,
                "c2": c2,
                "c3": c3,
                "count": len(verdicts),
                "results": SpectrumVerdictSerializer(verdicts, many=True).data,
            }
            if options["exclusions"]:
                payload["exclusions"] = ExclusionRecordSerializer(
                    exclusion_records(), many=True
                ).data
            return payload

        def markdown():
            return markdown_table(
                ["spectrum", "status", "citation"],
                [(v.spectrum.label, v.status, v.citation) for v in verdicts],
            )

        def plain():
            lines = [f"Spectra for (c1, c2, c3) = ({c1}, {c2}, {c3}): {len(verdicts)}"]
            for v in verdicts:
                marker = "" if v.realized else "  * unrealized: " + v.citation
                lines.append(f"  {v.spectrum.label}{marker}")
            return "\n".join(lines)

        self.emit(options["output_format"], data=data, markdown=markdown, plain=plain)
