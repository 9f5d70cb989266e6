# backend/asgi.py
"""
ASGI ENTRY POINT

Same sheaf API as backend.wsgi for ASGI servers. Nothing here is async;
the views are synchronous DRF views over in-memory registry data.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "backend.settings.dev")

application = get_asgi_application()
