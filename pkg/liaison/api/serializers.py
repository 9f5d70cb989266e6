from rest_framework import serializers

from curves.api.serializers import CurveClassSerializer


class TransferSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    linked_twist = serializers.IntegerField()
    h0_IX = serializers.IntegerField(allow_null=True)
    h1_OGamma = serializers.IntegerField(allow_null=True)
    h0_IC = serializers.IntegerField(allow_null=True)


class LiaisonReportSerializer(serializers.Serializer):
    curve = CurveClassSerializer()
    s = serializers.IntegerField()
    t = serializers.IntegerField()
    linked = CurveClassSerializer()
    transfer = TransferSerializer(allow_null=True)
    family_dim = serializers.IntegerField(allow_null=True)
