# quasihom/singularities/tasks.py

"""
Celery tasks for the census.

With `ENUMERATION_BACKEND = "celery"` the enumeration engine sends one
`scan_degree_task` per degree to the workers and merges the results in degree
order itself. Tasks return plain CSV records so results travel through the JSON
serializer configured in settings.

Tasks are discovered by the Celery instance in `quasihom/celery.py`.
"""

# Standard library imports
import logging

# Third-party imports
from celery import shared_task

# Local application imports
from .enumeration import scan_degree
from .exceptions import InvalidInputError, ResourceLimitError

LOGGER = logging.getLogger(__name__)


@shared_task(bind=True, max_retries=3, default_retry_delay=10)
def scan_degree_task(self, n: int, d: int, prune: bool = True) -> list:
    """
    Scans all census candidates of one degree.

    How it works:
    1.  **Scan:** `scan_degree` lists the (C2-bar) systems of degree d in census
        order, without their global index L.
    2.  **Serialize:** each row becomes its CSV record of strings, which the
        engine turns back into `CensusRow`s with `CensusRow.from_record`.
    3.  **Failures:** input and resource errors are raised to the caller at
        once. Any other failure is retried up to 3 times, 10 seconds apart.

    Args:
        self: The Celery task instance (passed with `bind=True`).
        n: Number of variables.
        d: The degree of the shard.
        prune: Whether to use the pruned candidate generator.

    Returns:
        The CSV records of the shard, in census order.
    """
    try:
        # --- 1. Scan the shard ---
        rows = scan_degree(n, d, prune)
        LOGGER.info(f"Shard n={n} d={d} scanned: {len(rows)} (C2-bar) systems")

        # --- 2. Serialize for the JSON result backend ---
        return [row.to_record() for row in rows]

    except (InvalidInputError, ResourceLimitError) as e:
        # Deterministic for the given arguments; not retried.
        LOGGER.error(f"Shard n={n} d={d} rejected: {e}")
        raise

    except Exception as e:
        # A lost worker or memory pressure; Celery reschedules the shard.
        LOGGER.exception(f"Unexpected error scanning shard n={n} d={d}: {e}")
        raise self.retry(exc=e)
