from django.urls import path

from .views import RunView

urlpatterns = [
    path("runs/<str:command>/", RunView.as_view(), name="run"),
]
