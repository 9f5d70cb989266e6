"""
PATH: atlas/api/views.py

ATLAS API VIEWS (READ-ONLY)

GET /api/atlas/components/?c1=&c3=&label=   registry records, filters optional
GET /api/atlas/verify/                      registry verification summary + failures
"""

from __future__ import annotations

from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from atlas.api.serializers import (
    ComponentQuerySerializer,
    ModuliComponentSerializer,
    VerificationReportSerializer,
)
from atlas.services.exceptions import AtlasServiceError
from atlas.services.registry import query
from atlas.services.verifier import verify_registry


@extend_schema(
    tags=["atlas"],
    parameters=[
        OpenApiParameter(name="c1", type=int, location=OpenApiParameter.QUERY, required=False, description="Normalized first Chern class (-1 or 0)."),
        OpenApiParameter(name="c3", type=int, location=OpenApiParameter.QUERY, required=False, description="Third Chern class."),
        OpenApiParameter(name="label", type=str, location=OpenApiParameter.QUERY, required=False, description="Exact record label, e.g. R(0,4,10)_1."),
    ],
    responses={200: dict},
)
class ComponentsView(APIView):
    permission_classes = [AllowAny]

    def get(self, request):
        params = ComponentQuerySerializer(data=request.query_params)
        if not params.is_valid():
            return Response(params.errors, status=status.HTTP_400_BAD_REQUEST)

        try:
            records = query(**params.validated_data)
        except AtlasServiceError as e:
            return Response({"detail": str(e)}, status=status.HTTP_503_SERVICE_UNAVAILABLE)

        return Response(
            {
                **params.validated_data,
                "count": len(records),
                "results": ModuliComponentSerializer(records, many=True).data,
            }
        )


@extend_schema(tags=["atlas"], responses={200: VerificationReportSerializer})
class VerifyView(APIView):
    permission_classes = [AllowAny]

    def get(self, request):
        try:
            report = verify_registry()
        except AtlasServiceError as e:
            return Response({"detail": str(e)}, status=status.HTTP_503_SERVICE_UNAVAILABLE)
        return Response(VerificationReportSerializer(report).data)
