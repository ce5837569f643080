# quasihom/quasihom/celery.py

"""
Celery application of the quasihom project.

This module defines the Celery instance used to distribute the census. The
enumeration engine hands one shard per degree to the workers when
`ENUMERATION_BACKEND = "celery"`, and merges the returned records in degree
order itself.

When a worker is started with `celery -A quasihom worker`, this file:
1.  Points Celery at the Django settings of the project.
2.  Creates the app instance and loads its configuration from those settings.
3.  Registers the shard tasks of `singularities.tasks`.
"""

import os
from celery import Celery

# --- Django Integration ---
# Must be set before the app instance is created, so that workers read the
# same settings module as `manage.py`.
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'quasihom.settings')

# --- Celery Application Instance ---
# The name doubles as the prefix of the task names, e.g.
# `singularities.tasks.scan_degree_task` is registered under this app.
app = Celery('quasihom')

# --- Configuration ---
# Every Celery setting in settings.py carries the CELERY_ prefix:
# CELERY_BROKER_URL, CELERY_RESULT_BACKEND, CELERY_TASK_ALWAYS_EAGER and so on.
# Tests run the tasks eagerly through CELERY_TASK_ALWAYS_EAGER.
app.config_from_object('django.conf:settings', namespace='CELERY')

# --- Task Discovery ---
# Looks for a `tasks.py` module in every installed app.
app.autodiscover_tasks()
