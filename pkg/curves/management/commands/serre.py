# curves/management/commands/serre.py

from __future__ import annotations

from atlas.services.dimensions import SerreFamilyInput, serre_family_dim
from backend.cli.base import SheafCommand
from backend.cli.formats import markdown_table
from curves.api.serializers import SerreReportSerializer
from curves.services.serre import dualizing_twist, omega_sections, serre_curve


class Command(SheafCommand):
    help = (
        "Degree and genus of the curve cut out by a section of F(k), the twist of "
        "omega_C holding the extension class, and optionally the family dimension."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--c1", type=int, required=True, help="Normalized c1 (-1 or 0).")
        parser.add_argument("--c2", type=int, default=4, help="c2 (default 4).")
        parser.add_argument("--c3", type=int, required=True, help="c3.")
        parser.add_argument("--k", type=int, default=1, help="Twist carrying the section (default 1).")
        parser.add_argument("--dim-curves", type=int, help="Dimension of the family of curves.")
        parser.add_argument("--h0-fk", type=int, help="h0(F(k)) along the family.")

    def handle(self, *args, **options):
        c1, c2, c3, k = options["c1"], options["c2"], options["c3"], options["k"]
        curve = serre_curve(c1=c1, c2=c2, c3=c3, k=k)
        n = dualizing_twist(c1, k)
        h0_omega = omega_sections(curve, n) if n >= 1 else None

        family_dim = None
        wants_family = options["dim_curves"] is not None or options["h0_fk"] is not None
        if wants_family:
            if options["dim_curves"] is None or options["h0_fk"] is None:
                self.invalid("--dim-curves and --h0-fk go together")
            if h0_omega is None:
                self.invalid(f"omega_C({n}) has no section count formula for n < 1")
            family_dim = serre_family_dim(
                SerreFamilyInput(
                    dim_curves=options["dim_curves"],
                    h0_omega=h0_omega,
                    h0_Fk=options["h0_fk"],
                )
            )

        report = {
            "c1": c1,
            "c2": c2,
            "c3": c3,
            "k": k,
            "curve": curve,
            "dualizing_twist": n,
            "h0_omega": h0_omega,
            "family_dim": family_dim,
        }

        def plain():
            lines = [
                f"Serre curve for (c1, c2, c3) = ({c1}, {c2}, {c3}), k={k}: {curve}",
                f"  extension class in H^0(omega_C({n}))",
                f"  h0(omega_C({n})) = {h0_omega if h0_omega is not None else 'n/a'}",
            ]
            if family_dim is not None:
                lines.append(f"  family dimension = {family_dim}")
            if curve.extrapolated:
                lines.append("  note: c2 != 4 is outside the anchored formulas")
            return "\n".join(lines)

        def markdown():
            return markdown_table(
                ["c1", "c2", "c3", "k", "degree", "genus", "omega twist", "h0(omega)", "family dim"],
                [(c1, c2, c3, k, curve.degree, curve.genus, n, h0_omega, family_dim)],
            )

        self.emit(
            options["output_format"],
            data=lambda: SerreReportSerializer(report).data,
            markdown=markdown,
            plain=plain,
        )
