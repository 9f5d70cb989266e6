from django.apps import AppConfig


class ChowConfig(AppConfig):
    name = "chow"
