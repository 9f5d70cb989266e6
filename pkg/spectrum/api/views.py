"""
PATH: spectrum/api/views.py

SPECTRA API VIEW (READ-ONLY)

GET /api/spectra/?c1=&c2=&c3=   every admissible spectrum with its verdict
GET /api/spectra/exclusions/    registry of admissible-but-unrealized spectra
"""

from __future__ import annotations

from django.conf import settings
from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from spectrum.api.serializers import (
    ExclusionRecordSerializer,
    SpectraQuerySerializer,
    SpectrumVerdictSerializer,
)
from spectrum.services.exceptions import SpectrumServiceError
from spectrum.services.exclusions import exclusion_records
from spectrum.services.spectra import enumerate_spectra


@extend_schema(
    tags=["spectrum"],
    parameters=[
        OpenApiParameter(name="c1", type=int, location=OpenApiParameter.QUERY, required=True, description="Normalized first Chern class (-1 or 0)."),
        OpenApiParameter(name="c2", type=int, location=OpenApiParameter.QUERY, required=True, description="Second Chern class (>= 1)."),
        OpenApiParameter(name="c3", type=int, location=OpenApiParameter.QUERY, required=True, description="Third Chern class."),
    ],
    responses={200: dict},
)
class SpectraView(APIView):
    permission_classes = [AllowAny]

    def get(self, request):
        query = SpectraQuerySerializer(data=request.query_params)
        if not query.is_valid():
            return Response(query.errors, status=status.HTTP_400_BAD_REQUEST)

        params = query.validated_data
        try:
            verdicts = enumerate_spectra(
                c1=params["c1"],
                c2=params["c2"],
                c3=params["c3"],
                max_c2=settings.SHEAVES["MAX_C2"],
            )
        except SpectrumServiceError as e:
            return Response({"detail": str(e)}, status=status.HTTP_400_BAD_REQUEST)

        return Response(
            {
                **params,
                "count": len(verdicts),
                "results": SpectrumVerdictSerializer(verdicts, many=True).data,
            }
        )


@extend_schema(tags=["spectrum"], responses={200: ExclusionRecordSerializer(many=True)})
class ExclusionListView(APIView):
    permission_classes = [AllowAny]

    def get(self, request):
        return Response(ExclusionRecordSerializer(exclusion_records(), many=True).data)
