# atlas/api/serializers.py

from rest_framework import serializers


class ModuliComponentSerializer(serializers.Serializer):
    c1 = serializers.IntegerField()
    c2 = serializers.IntegerField()
    c3 = serializers.IntegerField()
    label = serializers.CharField()
    dim = serializers.IntegerField()
    spectrum = serializers.SerializerMethodField()
    flags = serializers.SerializerMethodField()
    tangent_dim = serializers.IntegerField(allow_null=True)
    parent = serializers.CharField(allow_null=True)
    ingredients = serializers.SerializerMethodField()
    citation = serializers.CharField()

    def get_spectrum(self, record) -> list[int]:
        return list(record.spectrum.values)

    def get_flags(self, record) -> list[str]:
        return sorted(f.value for f in record.flags)

    def get_ingredients(self, record) -> list[dict]:
        return [i.to_dict() for i in record.ingredients]


class ComponentQuerySerializer(serializers.Serializer):
    c1 = serializers.IntegerField(min_value=-1, max_value=0, required=False)
    c3 = serializers.IntegerField(min_value=0, required=False)
    label = serializers.CharField(required=False)


class VerificationCheckSerializer(serializers.Serializer):
    label = serializers.CharField()
    check = serializers.CharField()
    ok = serializers.BooleanField()
    expected = serializers.CharField(allow_blank=True)
    actual = serializers.CharField(allow_blank=True)
    citation = serializers.CharField(allow_blank=True)


class VerificationReportSerializer(serializers.Serializer):
    ok = serializers.BooleanField()
    checks = serializers.SerializerMethodField()
    failures = VerificationCheckSerializer(many=True)

    def get_checks(self, report) -> int:
        return len(report.checks)

class CorpusCheckSerializer(serializers.Serializer):
    section = serializers.CharField()
    name = serializers.CharField()
    ok = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)
