# quasihom/singularities/tests/test_tasks.py

from unittest import mock

from django.test import SimpleTestCase

from singularities.enumeration import SearchSpec, enumerate_weight_systems, scan_degree
from singularities.exceptions import InvalidInputError
from singularities.tasks import scan_degree_task


class ScanDegreeTaskTests(SimpleTestCase):
    def test_records(self):
        result = scan_degree_task.apply(args=(3, 24)).get()
        self.assertEqual(result, [row.to_record() for row in scan_degree(3, 24)])

    def test_input_errors_are_not_retried(self):
        with mock.patch("singularities.tasks.scan_degree", side_effect=InvalidInputError("bad shard")) as scan:
            with self.assertRaises(InvalidInputError):
                scan_degree_task.apply(args=(3, 24)).get()
        self.assertEqual(scan.call_count, 1)

    def test_other_errors_are_retried(self):
        with mock.patch("singularities.tasks.scan_degree", side_effect=RuntimeError("worker lost")) as scan:
            with self.assertRaises(Exception):
                scan_degree_task.apply(args=(3, 24)).get()
        self.assertGreater(scan.call_count, 1)

    def test_celery_backend_matches_local(self):
        # Shards run in process instead of on a worker.
        with mock.patch("singularities.tasks.scan_degree_task.delay",
                        side_effect=lambda *args: scan_degree_task.apply(args=args)):
            remote = enumerate_weight_systems(SearchSpec(3, 30), keep=lambda row: True, backend="celery")
        local = enumerate_weight_systems(SearchSpec(3, 30), keep=lambda row: True, backend="local", workers=1)
        self.assertEqual(remote.rows, local.rows)
