from rest_framework import serializers

from cohomtable.services.entries import Known
from cohomtable.services.tables import ROWS


class CohomologyTableSerializer(serializers.Serializer):
    c1 = serializers.IntegerField()
    c2 = serializers.IntegerField()
    c3 = serializers.IntegerField()
    spectrum = serializers.SerializerMethodField()
    range = serializers.SerializerMethodField()
    rows = serializers.SerializerMethodField()
    params = serializers.SerializerMethodField()
    derived = serializers.SerializerMethodField()

    def get_spectrum(self, table):
        return list(table.spectrum.values) if table.spectrum else None

    def get_range(self, table):
        return [table.twists.start, table.twists.stop]

    def get_rows(self, table):
        # Known entries stay integers; parameters and "?" are strings.
        def cell(entry):
            return entry.value if isinstance(entry, Known) else str(entry)

        return {f"h{i}": [cell(e) for e in table.row(i)] for i in ROWS}

    def get_params(self, table):
        return {
            name: {"min": bounds.minimum, "max": bounds.maximum}
            for name, bounds in sorted(table.params.items())
        }

    def get_derived(self, table):
        return {name: str(expr) for name, expr in sorted(table.derived.items())}


class DiffEntrySerializer(serializers.Serializer):
    row = serializers.IntegerField()
    twist = serializers.IntegerField()
    kind = serializers.CharField()
    ours = serializers.CharField()
    golden = serializers.CharField()


class DiffReportSerializer(serializers.Serializer):
    empty = serializers.BooleanField(source="is_empty")
    entries = DiffEntrySerializer(many=True)
    renaming = serializers.DictField(child=serializers.CharField())


class ReproductionReportSerializer(serializers.Serializer):
    golden = serializers.CharField()
    ok = serializers.BooleanField()
    assignments = serializers.SerializerMethodField()
    errata = serializers.SerializerMethodField()
    failures = serializers.SerializerMethodField()

    def get_assignments(self, report):
        return [
            {"assignment": o.assignment, "spectrum": o.spectrum, "ok": o.ok} for o in report.outcomes
        ]

    def get_errata(self, report):
        return [
            {
                "row": e.row,
                "twist": e.twist,
                "printed": e.printed,
                "corrected": e.corrected,
                "ok": e.ok,
            }
            for e in report.errata
        ]

    def get_failures(self, report):
        return report.failures()
