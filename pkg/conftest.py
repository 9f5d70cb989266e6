"""Configure Django for pytest the same way manage.py / wsgi.py do."""

import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "backend.settings.dev")
django.setup()
