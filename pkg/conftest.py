# Configure Django the way `manage.py test` does before pytest collects the
# app's SimpleTestCase suites.
import os

import django
from django.test.utils import setup_test_environment

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'quasihom.settings')
django.setup()
setup_test_environment()
