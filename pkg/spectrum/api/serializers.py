# spectrum/api/serializers.py

from rest_framework import serializers


class SpectrumVerdictSerializer(serializers.Serializer):
    spectrum = serializers.ListField(child=serializers.IntegerField(), source="spectrum.values")
    label = serializers.CharField(source="spectrum.label")
    c1 = serializers.IntegerField(source="spectrum.c1")
    c2 = serializers.IntegerField(source="spectrum.c2")
    c3 = serializers.IntegerField(source="spectrum.c3")
    status = serializers.CharField()
    citation = serializers.CharField(allow_blank=True)


class SpectraQuerySerializer(serializers.Serializer):
    c1 = serializers.IntegerField(min_value=-1, max_value=0)
    c2 = serializers.IntegerField(min_value=1)
    c3 = serializers.IntegerField()


class ExclusionRecordSerializer(serializers.Serializer):
    c1 = serializers.IntegerField()
    c2 = serializers.IntegerField()
    spectrum = serializers.ListField(child=serializers.IntegerField())
    status = serializers.CharField()
    citation = serializers.CharField()
