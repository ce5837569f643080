# quasihom/quasihom/wsgi.py

"""
WSGI entry point serving the read-only `/api/` endpoints, e.g.
`gunicorn quasihom.wsgi`. `runserver` uses it through WSGI_APPLICATION.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'quasihom.settings')

application = get_wsgi_application()
