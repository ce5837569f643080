# quasihom/quasihom/settings.py
"""
Django settings for the quasihom project.

There is no database and no session or admin machinery: the project hosts the
`singularities` app, its management commands, its JSON endpoints and the Celery
workers of the census. Everything environment-specific is read from a .env file
or the environment.
"""

from pathlib import Path
from decouple import Csv, config
from dotenv import load_dotenv

load_dotenv()

# ==============================================================================
# CORE SETTINGS
# ==============================================================================

# Build paths inside the project like this: BASE_DIR / 'subdir'
BASE_DIR = Path(__file__).resolve().parent.parent
SECRET_KEY = config('DJANGO_KEY', default='quasihom-insecure-development-key')
DEBUG = config('DJANGO_DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='127.0.0.1,localhost', cast=Csv())


# ==============================================================================
# APPLICATION-SPECIFIC SETTINGS (Loaded from Environment Variables)
# ==============================================================================

# Bound of the cached prime table used by factorization.
PRIME_TABLE_BOUND = config('PRIME_TABLE_BOUND', default=10_000, cast=int)

# Inputs above these limits are rejected by `analyze` (exit code 3).
ANALYZE_MAX_VARIABLES = config('ANALYZE_MAX_VARIABLES', default=12, cast=int)
ANALYZE_MAX_DEGREE = config('ANALYZE_MAX_DEGREE', default=1_000_000, cast=int)

# `local` runs census shards in a process pool, `celery` sends one task per degree.
ENUMERATION_BACKEND = config('ENUMERATION_BACKEND', default='local')
ENUMERATION_WORKERS = config('ENUMERATION_WORKERS', default=1, cast=int)
ENUMERATION_CHECKPOINT_DIR = Path(
    config('ENUMERATION_CHECKPOINT_DIR', default=str(BASE_DIR / 'checkpoints'))
)


# ==============================================================================
# DJANGO-SPECIFIC CONFIGURATION
# ==============================================================================

INSTALLED_APPS = [
    'singularities.apps.SingularitiesConfig',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'quasihom.urls'

WSGI_APPLICATION = 'quasihom.wsgi.application'

# No models.
DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True


# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': config('LOG_FILE', default='quasihom.log'),
            'formatter': 'verbose',
        },
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'singularities': {
            'handlers': ['file', 'console'],
            'level': config('LOG_LEVEL', default='INFO'),
            'propagate': True,
        },
    },
}

# ==============================================================================
# CELERY CONFIGURATION
# ==============================================================================
CELERY_BROKER_URL = config('CELERY_BROKER_URL', default='redis://localhost:6379/0')
CELERY_RESULT_BACKEND = config('CELERY_RESULT_BACKEND', default='redis://localhost:6379/0')
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
# Run tasks in-process (tests, single-machine runs without a broker).
CELERY_TASK_ALWAYS_EAGER = config('CELERY_TASK_ALWAYS_EAGER', default=False, cast=bool)
CELERY_TASK_EAGER_PROPAGATES = True
