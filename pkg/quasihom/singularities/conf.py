# quasihom/singularities/conf.py

"""
App-level settings with defaults.

The math modules must stay importable (and usable) without a configured Django
project, so every setting is read lazily through `get_setting`, falling back to
the defaults declared here.
"""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "PRIME_TABLE_BOUND": 10_000,
    "ANALYZE_MAX_VARIABLES": 12,
    "ANALYZE_MAX_DEGREE": 1_000_000,
    "ENUMERATION_WORKERS": 1,
    "ENUMERATION_BACKEND": "local",
    "ENUMERATION_CHECKPOINT_DIR": None,
}


def get_setting(name: str):
    """Returns the project setting `name`, or the app default if unset."""
    try:
        return getattr(settings, name, DEFAULTS[name])
    except ImproperlyConfigured:
        return DEFAULTS[name]
