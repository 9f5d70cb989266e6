from rest_framework import serializers


class CurveClassSerializer(serializers.Serializer):
    degree = serializers.IntegerField()
    genus = serializers.IntegerField()
    extrapolated = serializers.BooleanField()


class SerreReportSerializer(serializers.Serializer):
    c1 = serializers.IntegerField()
    c2 = serializers.IntegerField()
    c3 = serializers.IntegerField()
    k = serializers.IntegerField()
    curve = CurveClassSerializer()
    dualizing_twist = serializers.IntegerField()
    h0_omega = serializers.IntegerField(allow_null=True)
    family_dim = serializers.IntegerField(allow_null=True)
