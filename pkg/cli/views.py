import logging

from django.http import HttpResponse
from drf_spectacular.utils import OpenApiResponse, extend_schema
from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from cli.serializers import RunConfigSerializer
from cli.services.runner import dispatch, render
from cmatrix.exceptions import EXIT_NUMERIC, SgwsError

logger = logging.getLogger(__name__)


class RunView(APIView):
    """
    Run endpoint

    POST /api/runs/{command}/ with a RunConfig body returns the report the
    management command of the same name prints.
    """

    permission_classes = [AllowAny]

    @extend_schema(
        request=RunConfigSerializer,
        responses={
            200: OpenApiResponse(description="Run report (JSON, or CSV for sweeps)"),
            400: OpenApiResponse(description="Invalid configuration or inputs"),
            422: OpenApiResponse(description="Numeric failure"),
        },
    )
    def post(self, request, command):
        data = dict(request.data)
        data["command"] = command
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            return Response(
                {"error": "invalid configuration", "detail": serializer.errors},
                status=status.HTTP_400_BAD_REQUEST,
            )

        try:
            result = dispatch(serializer.validated_data)
        except SgwsError as exc:
            code = (
                status.HTTP_422_UNPROCESSABLE_ENTITY
                if exc.exit_code == EXIT_NUMERIC
                else status.HTTP_400_BAD_REQUEST
            )
            logger.info("run %s rejected: %s", command, exc)
            return Response({"error": type(exc).__name__, "detail": str(exc)}, status=code)

        if result.format == "csv":
            return HttpResponse(render(result), content_type="text/csv")
        return Response(result.report, status=status.HTTP_200_OK)
