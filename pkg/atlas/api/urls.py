# atlas/api/urls.py

from django.urls import path

from atlas.api.views import ComponentsView, VerifyView

urlpatterns = [
    path("components/", ComponentsView.as_view(), name="atlas-components"),
    path("verify/", VerifyView.as_view(), name="atlas-verify"),
]
