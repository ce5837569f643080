# quasihom/singularities/tests/test_weights.py

import csv
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from singularities import cyclo, weights
from singularities.arith import divisors
from singularities.enumeration import DATA_DIR
from singularities.exceptions import InvalidInputError, NotIntegralError, PreconditionError
from singularities.weights import WeightSystem

TABLE1_ROW1 = WeightSystem((27, 16, 10, 1), 81)
C2BAR_ONLY_D265 = WeightSystem((58, 33, 24, 1), 265)
A2 = WeightSystem((1,), 3)
A1_A1 = WeightSystem((1, 1), 2)


@st.composite
def weight_systems(draw, max_n=4, max_d=40):
    d = draw(st.integers(min_value=2, max_value=max_d))
    n = draw(st.integers(min_value=1, max_value=max_n))
    v = draw(st.lists(st.integers(min_value=1, max_value=d - 1), min_size=n, max_size=n))
    return WeightSystem(tuple(v), d)


def table1_systems():
    with (DATA_DIR / "table1.csv").open(encoding="utf-8", newline="") as stream:
        for row in csv.DictReader(stream):
            yield WeightSystem(tuple(int(row[f"v{i}"]) for i in range(1, 5)), int(row["d"])), row


class WeightSystemTests(SimpleTestCase):
    def test_parse_and_format(self):
        ws = WeightSystem.parse("27, 16,10,1", 81)
        self.assertEqual(ws, TABLE1_ROW1)
        self.assertEqual(str(ws), "(27,16,10,1;81)")
        self.assertEqual(ws.to_json(), {"weights": [27, 16, 10, 1], "d": 81})

    def test_validation(self):
        for v, d in (((), 3), ((3,), 3), ((0,), 3), ((1.5,), 3)):
            with self.assertRaises(InvalidInputError):
                WeightSystem(v, d)
        with self.assertRaises(InvalidInputError):
            WeightSystem.parse("1,x", 5)

    def test_normalized_input(self):
        self.assertEqual(WeightSystem.from_normalized(["1/3", "1/4"]), WeightSystem((4, 3), 12))
        with self.assertRaises(InvalidInputError):
            WeightSystem.from_normalized(["1/2", "3/2"])

    def test_reduce_and_equivalence(self):
        self.assertEqual(weights.reduce(WeightSystem((2, 2), 4)), A1_A1)
        self.assertEqual(weights.reduce(TABLE1_ROW1), TABLE1_ROW1)
        self.assertTrue(weights.equivalent(A1_A1, WeightSystem((3, 3), 6)))
        self.assertFalse(weights.equivalent(A1_A1, A2))
        self.assertEqual(weights.normalize(WeightSystem((2, 2), 4)), [Fraction(1, 2), Fraction(1, 2)])
        self.assertEqual(weights.normalize(WeightSystem((4, 3), 12)), [Fraction(1, 3), Fraction(1, 4)])

    def test_st_pairs(self):
        self.assertEqual(weights.st_pairs(A2).pairs, ((1, 3),))
        self.assertEqual(weights.st_pairs(A2).d_w, 3)
        reduced = weights.st_pairs(WeightSystem((3, 2), 9))
        self.assertEqual(reduced.pairs, ((1, 3), (2, 9)))
        self.assertEqual(reduced.d_w, 9)
        self.assertEqual(weights.st_pairs(A1_A1).d_w, 2)

    def test_m_set_and_mu_k(self):
        self.assertEqual(weights.m_set(A2, 3), {1})
        self.assertEqual(weights.mu_k(A2, 3), 2)
        self.assertEqual(weights.m_set(A2, 1), frozenset())
        self.assertEqual(weights.mu_k(A2, 1), 1)

    def test_multiplicity_three(self):
        self.assertTrue(weights.has_multiplicity_three(TABLE1_ROW1))
        self.assertFalse(weights.has_multiplicity_three(A1_A1))


class ConditionTests(SimpleTestCase):
    def test_semigroup_membership(self):
        self.assertFalse(weights.semigroup_member(TABLE1_ROW1, {2, 3}, 54))
        self.assertTrue(weights.semigroup_member(TABLE1_ROW1, {2, 3}, 80))
        self.assertTrue(weights.semigroup_member(TABLE1_ROW1, {1}, 0))
        with self.assertRaises(InvalidInputError):
            weights.semigroup_member(TABLE1_ROW1, (), 5)

    def test_c2_examples(self):
        self.assertTrue(weights.check_c2(A1_A1))
        self.assertFalse(weights.check_c2(TABLE1_ROW1))
        self.assertFalse(weights.check_c2(C2BAR_ONLY_D265))

    def test_c2bar_examples(self):
        self.assertTrue(weights.check_c2bar(TABLE1_ROW1))
        self.assertTrue(weights.check_c2bar(C2BAR_ONLY_D265))
        self.assertFalse(weights.check_c2bar(WeightSystem((2, 2), 5)))

    def test_a_tuple(self):
        self.assertEqual(weights.a_tuple(TABLE1_ROW1), [2, 2, 4, 1, 4, 4])
        self.assertEqual(weights.a_tuple(WeightSystem((49, 22, 15, 12), 147)), [2, 2, 2, 3, 1, 2])
        with self.assertRaises(InvalidInputError):
            weights.a_tuple(A2)

    def test_every_table1_row_has_c2bar_without_c2(self):
        for ws, row in table1_systems():
            self.assertTrue(weights.check_c2bar(ws), ws)
            self.assertFalse(weights.check_c2(ws), ws)
            self.assertEqual(weights.milnor_number(ws), int(row["mu"]), ws)
            self.assertEqual(weights.a_tuple(ws), [int(row[f"a{i}"]) for i in range(1, 7)], ws)
            self.assertTrue(weights.sigma_vs_divisor(ws), ws)


class DivisorTests(SimpleTestCase):
    def test_divisor_examples(self):
        self.assertEqual(weights.divisor(A2), cyclo.lambda_element(3) - cyclo.ONE)
        self.assertEqual(weights.psi_w(A2).psi, {3: 1})
        self.assertEqual(weights.divisor(A1_A1), cyclo.ONE)
        self.assertEqual(cyclo.degree(weights.divisor(TABLE1_ROW1)), 4615)

    def test_lefschetz_closed_form_examples(self):
        self.assertEqual(weights.lefschetz_closed_form(A2, 1), -1)
        self.assertEqual(weights.lefschetz_closed_form(A2, 3), 2)

    def test_milnor_numbers(self):
        self.assertEqual(weights.milnor_number(TABLE1_ROW1), 4615)
        self.assertEqual(weights.milnor_number(C2BAR_ONLY_D265), 66516)
        self.assertEqual(weights.milnor_number(WeightSystem((55, 51, 30, 18, 10), 120)), 299)

    def test_rho_and_exponents(self):
        self.assertEqual(weights.rho(A2).items(), ((Fraction(1, 3), 1), (Fraction(2, 3), 1)))
        self.assertEqual(weights.exponents(A2), [Fraction(1, 3), Fraction(2, 3)])
        self.assertEqual(weights.exponents(A1_A1), [Fraction(1)])
        self.assertTrue(weights.rho_is_integral(TABLE1_ROW1))
        self.assertEqual(weights.rho(TABLE1_ROW1).total, 4615)

    def test_rho_obstruction(self):
        ws = WeightSystem((2, 2), 5)
        self.assertFalse(weights.rho_is_integral(ws))
        with self.assertRaises(NotIntegralError) as ctx:
            weights.rho(ws)
        self.assertEqual(ctx.exception.witness, 2)

    def test_sigma_vs_divisor(self):
        self.assertTrue(weights.sigma_vs_divisor(A2))
        self.assertTrue(weights.sigma_vs_divisor(A1_A1))
        with self.assertRaises(PreconditionError):
            weights.sigma_vs_divisor(WeightSystem((2, 2), 5))

    def test_concat(self):
        a1 = WeightSystem((1,), 2)
        self.assertEqual(weights.concat(a1, a1), A1_A1)
        self.assertEqual(weights.divisor(weights.concat(a1, a1)), cyclo.ONE)
        self.assertEqual(weights.concat(A2, a1), WeightSystem((2, 3), 6))

    def test_saito(self):
        self.assertTrue(weights.saito_strong(A2))
        for v, d in (((55, 51, 30, 18, 10), 120), ((85, 81, 60, 18, 10), 180)):
            ws = WeightSystem(v, d)
            self.assertEqual(weights.saito_value(ws), 0)
            self.assertFalse(weights.saito_strong(ws))

    def test_saito_needs_c2(self):
        self.assertTrue(weights.check_c2bar(TABLE1_ROW1))
        for predicate in (weights.saito_value, weights.saito_strong, weights.saito_weak):
            with self.assertRaises(PreconditionError, msg=predicate.__name__):
                predicate(TABLE1_ROW1)


class WeightPropertyTests(SimpleTestCase):
    @given(weight_systems())
    @settings(max_examples=200, deadline=None)
    def test_lefschetz_numbers_of_the_divisor(self, ws):
        D = weights.divisor(ws)
        d_w = weights.st_pairs(ws).d_w
        for k in divisors(d_w) + [7, 2 * d_w]:
            self.assertEqual(cyclo.lefschetz(D, k), weights.lefschetz_closed_form(ws, k))
        self.assertEqual(cyclo.degree(D), weights.milnor_number(ws))

    @given(weight_systems())
    @settings(max_examples=200, deadline=None)
    def test_c2_implies_c2bar_and_nonnegative_rho(self, ws):
        if not weights.check_c2(ws):
            return
        self.assertTrue(weights.check_c2bar(ws))
        self.assertTrue(weights.psi_w(ws).is_multiplicity_map)
        self.assertTrue(weights.rho(ws).is_nonnegative)
        self.assertTrue(weights.sigma_vs_divisor(ws))
        self.assertTrue(weights.rank_check(ws))

    @given(weight_systems())
    @settings(max_examples=200, deadline=None)
    def test_c2bar_gives_integral_rho(self, ws):
        if not weights.check_c2bar(ws):
            return
        self.assertTrue(weights.rho_is_integral(ws))
        self.assertEqual(weights.rho(ws).total, weights.milnor_number(ws))

    @given(weight_systems(max_n=2, max_d=24), weight_systems(max_n=2, max_d=24))
    @settings(max_examples=100, deadline=None)
    def test_thom_sebastiani_divisor_is_a_product(self, ws1, ws2):
        self.assertEqual(weights.divisor(weights.concat(ws1, ws2)), weights.divisor(ws1) * weights.divisor(ws2))
