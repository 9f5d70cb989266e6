# liaison/management/commands/liaison.py

from __future__ import annotations

from backend.cli.base import SheafCommand
from backend.cli.formats import markdown_table
from curves.services.serre import CurveClass
from liaison.api.serializers import LiaisonReportSerializer
from liaison.services.linkage import (
    LinkSpec,
    complete_intersection_h0,
    h0_transfer,
    h1_transfer,
    linked_curve,
    linked_family_dim,
    linked_h1_structure_sheaf,
)

FAMILY_FIELDS = ("dim_H", "h0_C_s", "h0_C_t", "h0_C2_s", "h0_C2_t")


class Command(SheafCommand):
    help = "Invariants of the curve linked to (deg, genus) by a complete intersection of type (s, t)."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--deg", type=int, required=True, help="Degree of the curve.")
        parser.add_argument("--genus", type=int, required=True, help="Arithmetic genus of the curve.")
        parser.add_argument("--s", type=int, required=True, help="Degree of the first surface.")
        parser.add_argument("--t", type=int, required=True, help="Degree of the second surface.")
        parser.add_argument(
            "--transfer",
            type=int,
            metavar="N",
            help="Transfer cohomology at twist N to the linked side.",
        )
        parser.add_argument("--h0-ix", type=int, help="Override h0(I_X(N)).")
        parser.add_argument("--h1-ogamma", type=int, help="Override h1(O_G(s+t-N-4)).")
        parser.add_argument(
            "--family",
            help="dim_H,h0_C_s,h0_C_t,h0_C2_s,h0_C2_t for the linked-family dimension.",
        )

    def handle(self, *args, **options):
        link = LinkSpec(
            curve=CurveClass(options["deg"], options["genus"]),
            s=options["s"],
            t=options["t"],
        )
        gamma = linked_curve(link)

        transfer = None
        if options["transfer"] is not None:
            transfer = self._transfer(link, gamma, options)
        elif options["h0_ix"] is not None or options["h1_ogamma"] is not None:
            self.invalid("--h0-ix and --h1-ogamma need --transfer")

        family_dim = None
        if options["family"]:
            family_dim = linked_family_dim(**self._family(options["family"]))

        report = {
            "curve": link.curve,
            "s": link.s,
            "t": link.t,
            "linked": gamma,
            "transfer": transfer,
            "family_dim": family_dim,
        }

        def plain():
            lines = [f"{link.curve} linked by ({link.s}, {link.t}) -> {gamma}"]
            if transfer is not None:
                n, m = transfer["n"], transfer["linked_twist"]
                lines.append(f"  h1(I_C({n})) = h1(I_G({m}))")
                if transfer["h0_IC"] is not None:
                    lines.append(
                        f"  h0(I_C({n})) = {transfer['h0_IX']} + {transfer['h1_OGamma']} = {transfer['h0_IC']}"
                    )
            if family_dim is not None:
                lines.append(f"  linked family dimension = {family_dim}")
            return "\n".join(lines)

        def markdown():
            return markdown_table(
                ["deg", "genus", "s", "t", "linked deg", "linked genus", "family dim"],
                [(link.curve.degree, link.curve.genus, link.s, link.t, gamma.degree, gamma.genus, family_dim)],
            )

        self.emit(
            options["output_format"],
            data=lambda: LiaisonReportSerializer(report).data,
            markdown=markdown,
            plain=plain,
        )

    def _transfer(self, link, gamma, options) -> dict:
        n = options["transfer"]
        m = h1_transfer(link, n)
        h0_ix = options["h0_ix"]
        if h0_ix is None:
            h0_ix = complete_intersection_h0(link.s, link.t, n)
        h1_og = options["h1_ogamma"]
        if h1_og is None:
            h1_og = linked_h1_structure_sheaf(gamma, m)
        h0_ic = h0_transfer(link, n, h0_IX=h0_ix, h1_OGamma=h1_og) if h1_og is not None else None
        return {"n": n, "linked_twist": m, "h0_IX": h0_ix, "h1_OGamma": h1_og, "h0_IC": h0_ic}

    def _family(self, text: str) -> dict:
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError:
            self.invalid(f"--family expects five integers, got {text!r}")
        if len(values) != len(FAMILY_FIELDS):
            self.invalid(f"--family expects five integers, got {len(values)}")
        return dict(zip(FAMILY_FIELDS, values))
