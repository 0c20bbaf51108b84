"""
WSGI config for sgws_certifier project.

It exposes the WSGI callable as a module-level variable named ``application``
so the report API can be served by gunicorn.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "sgws_certifier.settings")

application = get_wsgi_application()
