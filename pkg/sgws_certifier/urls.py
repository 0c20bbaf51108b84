"""
URL configuration for sgws_certifier project.

`/api/runs/<command>/` accepts the same RunConfig the management commands
build from their flags and answers with the same JSON report.
"""

from django.urls import path, include
from rest_framework.decorators import api_view
from rest_framework.response import Response
from drf_spectacular.views import SpectacularAPIView

from sgws_certifier import __version__


@api_view(["GET"])
def health_check(request):
    """Lightweight health check endpoint"""
    return Response({"status": "ok", "version": __version__}, status=200)


urlpatterns = [
    path("api/", include("cli.urls")),
    path("health/", health_check, name="health_check"),
    path("api/schema/", SpectacularAPIView.as_view(), name="schema"),
]
