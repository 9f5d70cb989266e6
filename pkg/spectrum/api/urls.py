# spectrum/api/urls.py

from django.urls import path

from spectrum.api.views import ExclusionListView, SpectraView

urlpatterns = [
    path("", SpectraView.as_view(), name="spectra"),
    path("exclusions/", ExclusionListView.as_view(), name="spectra-exclusions"),
]
