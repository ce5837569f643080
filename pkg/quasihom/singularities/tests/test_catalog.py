# quasihom/singularities/tests/test_catalog.py

from fractions import Fraction

from django.test import SimpleTestCase

from singularities import catalog
from singularities.enumeration import load_golden
from singularities.exceptions import InvalidInputError
from singularities.weights import WeightSystem, check_c2, equivalent, milnor_number, saito_strong, saito_value


class NamedSystemTests(SimpleTestCase):
    def test_simple_singularities(self):
        self.assertEqual(catalog.named("A3"), WeightSystem((1,), 4))
        self.assertEqual(catalog.named("D4"), WeightSystem((1, 1), 3))
        self.assertEqual(catalog.named("E6"), WeightSystem((4, 3), 12))
        self.assertEqual(catalog.named("E8"), WeightSystem((5, 3), 15))

    def test_milnor_numbers(self):
        for name, mu in [("A5", 5), ("D13", 13), ("E6", 6), ("E7", 7), ("E8", 8)]:
            self.assertEqual(milnor_number(catalog.named(name)), mu, name)

    def test_chain_type_systems(self):
        self.assertEqual(catalog.named("K1").d, 40)
        self.assertEqual(catalog.named("K3").v, (6, 10, 13))

    def test_unknown_names(self):
        for name in ("E9", "K4", "B3", "A0", "D3", ""):
            with self.assertRaises(InvalidInputError, msg=name):
                catalog.named(name)

    def test_thom_sebastiani(self):
        ws = catalog.thom_sebastiani(catalog.named("A1"), catalog.named("A2"))
        self.assertTrue(equivalent(ws, WeightSystem.from_normalized([Fraction(1, 2), Fraction(1, 3)])))
        self.assertEqual(milnor_number(ws), 2)
        with self.assertRaises(InvalidInputError):
            catalog.thom_sebastiani()


class SaitoCounterexampleTests(SimpleTestCase):
    def test_sums_rebuild_the_census_rows(self):
        golden = load_golden("table2.csv")
        systems = catalog.saito_counterexamples()
        self.assertEqual(len(systems), len(golden))
        for ws, row in zip(systems, golden):
            self.assertEqual(ws.d, int(row["d"]))
            self.assertEqual(ws.v, tuple(int(row[f"v{i}"]) for i in range(1, 6)))
            self.assertEqual(milnor_number(ws), int(row["mu"]))

    def test_sums_break_the_strong_inequality(self):
        for names, ws in zip(catalog.SAITO_DECOMPOSITIONS, catalog.saito_counterexamples()):
            self.assertTrue(check_c2(ws), names)
            self.assertEqual(saito_value(ws), 0, names)
            self.assertFalse(saito_strong(ws), names)
