from django.apps import AppConfig


class CohomtableConfig(AppConfig):
    name = "cohomtable"
