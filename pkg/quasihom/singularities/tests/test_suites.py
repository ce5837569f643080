# quasihom/singularities/tests/test_suites.py

from django.test import SimpleTestCase, override_settings

from singularities import suites
from singularities.exceptions import InvalidInputError
from singularities.orders import quadrant


@override_settings(ENUMERATION_BACKEND="local", ENUMERATION_WORKERS=1)
class SuiteTests(SimpleTestCase):
    def test_every_suite_passes_on_a_small_run(self):
        reports = suites.run_suite("all", seed=11, cases=10, d_max=30, max_vertices=6)
        self.assertEqual([report.suite for report in reports], list(suites.SUITES))
        for report in reports:
            self.assertTrue(report.ok, report.to_json())

    def test_seed_makes_runs_repeatable(self):
        first = suites.run_suite("orders", seed=4, cases=10, max_vertices=4)[0].to_json()
        second = suites.run_suite("orders", seed=4, cases=10, max_vertices=4)[0].to_json()
        self.assertEqual(first, second)

    def test_counterexamples_are_capped(self):
        prop = suites.PropertyResult("never")
        for case in range(suites.MAX_COUNTEREXAMPLES + 3):
            prop.record(False, case)
        self.assertEqual(prop.failures, suites.MAX_COUNTEREXAMPLES + 3)
        self.assertEqual(len(prop.counterexamples), suites.MAX_COUNTEREXAMPLES)
        self.assertFalse(prop.ok)

    def test_unknown_suite(self):
        with self.assertRaises(InvalidInputError):
            suites.run_suite("everything")


class SmallTupleTests(SimpleTestCase):
    def test_every_small_tuple_is_listed_once(self):
        for max_vertices, expected in ((1, 1), (4, 55), (6, 247)):
            tuples = list(suites.small_tuples(max_vertices=max_vertices))
            self.assertEqual(len(tuples), expected)
            self.assertEqual(len(set(tuples)), expected)
            self.assertTrue(all(len(quadrant(t).vertices) <= max_vertices for t in tuples))
        self.assertEqual(sum(1 for _ in suites.small_tuples()), 13311)
