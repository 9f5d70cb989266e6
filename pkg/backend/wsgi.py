# backend/wsgi.py
"""
WSGI ENTRY POINT

Serves the read-only sheaf API (spectra, atlas components, registry
verification) under gunicorn: `gunicorn backend.wsgi`.

Falls back to dev settings; deployments set
DJANGO_SETTINGS_MODULE=backend.settings.prod so Sentry and host checks apply.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "backend.settings.dev")

application = get_wsgi_application()
