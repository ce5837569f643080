# quasihom/singularities/tests/test_cyclo.py

import math
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly, cyclotomic_poly, divisors as sympy_divisors, ilcm, symbols

from singularities import cyclo
from singularities.arith import divisors
from singularities.cyclo import CycloElement, IntPolynomial, PsiMap, lambda_element, psi_element
from singularities.exceptions import ContractViolation, InvalidInputError

T = symbols("t")

elements = st.dictionaries(
    st.integers(min_value=1, max_value=30),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    max_size=4,
).map(CycloElement)

multiplicity_maps = st.dictionaries(
    st.integers(min_value=1, max_value=24),
    st.integers(min_value=1, max_value=3),
    max_size=3,
).map(PsiMap)

psi_values = st.dictionaries(
    st.integers(min_value=1, max_value=30),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    max_size=4,
).map(PsiMap)


class BasisTests(SimpleTestCase):
    def test_lambda_and_psi_elements(self):
        self.assertEqual(lambda_element(6).chi, {6: 1})
        self.assertEqual(cyclo.degree(lambda_element(6)), 6)
        self.assertEqual(psi_element(1).chi, {1: 1})
        self.assertEqual(psi_element(6).chi, {6: 1, 3: -1, 2: -1, 1: 1})
        self.assertEqual(psi_element(4).chi, {4: 1, 2: -1})

    def test_linear_structure(self):
        l2 = lambda_element(2)
        self.assertEqual(cyclo.add(l2, cyclo.scale(l2, -1)), cyclo.ZERO)
        self.assertEqual(cyclo.add(lambda_element(3), cyclo.ONE).chi, {3: 1, 1: 1})
        self.assertEqual(cyclo.scale(lambda_element(9), Fraction(1, 2)).chi, {9: Fraction(1, 2)})

    def test_product_rule(self):
        self.assertEqual(cyclo.mul(lambda_element(2), lambda_element(3)), lambda_element(6))
        self.assertEqual(cyclo.mul(lambda_element(2), lambda_element(2)), CycloElement({2: 2}))
        a1 = lambda_element(2) - cyclo.ONE
        self.assertEqual(a1 * a1, cyclo.ONE)

    def test_trace_degree_lefschetz(self):
        self.assertEqual(cyclo.trace(psi_element(6)), 1)
        self.assertEqual(cyclo.trace(lambda_element(5)), 0)
        self.assertEqual(cyclo.degree(psi_element(6)), 2)
        self.assertEqual(cyclo.lefschetz(lambda_element(3), 3), 3)
        self.assertEqual(cyclo.lefschetz(lambda_element(3), 1), 0)
        for k in (0, 1, 7, 12):
            self.assertEqual(cyclo.lefschetz(cyclo.ONE, k), 1)

    def test_to_psi_examples(self):
        self.assertEqual(cyclo.to_psi(lambda_element(6)).psi, {1: 1, 2: 1, 3: 1, 6: 1})
        a1 = lambda_element(2) - cyclo.ONE
        self.assertEqual(cyclo.to_psi(a1 * a1).psi, {1: 1})

    def test_from_lefschetz(self):
        self.assertEqual(cyclo.from_lefschetz({1: 0, 3: 3}, 3), lambda_element(3))
        self.assertEqual(cyclo.from_lefschetz({1: 1, 2: 1, 3: 1, 6: 1}, 6), cyclo.ONE)

    def test_from_lefschetz_rejects_missing_or_inconsistent_values(self):
        with self.assertRaises(InvalidInputError):
            cyclo.from_lefschetz({1: 0}, 3)
        with self.assertRaises(ContractViolation):
            cyclo.from_lefschetz({1: 0, 3: 3, 2: 5}, 3)

    def test_rejects_bad_indices(self):
        with self.assertRaises(InvalidInputError):
            lambda_element(0)
        with self.assertRaises(InvalidInputError):
            CycloElement({0: 1})
        with self.assertRaises(InvalidInputError):
            cyclo.lefschetz(cyclo.ONE, -1)

    def test_json_round_trip(self):
        element = CycloElement({3: Fraction(1, 2), 1: -1})
        self.assertEqual(cyclo.element_from_json(element.to_json()), element)
        self.assertEqual(element.to_json(), {"basis": "lambda", "coeffs": [[1, -1, 1], [3, 1, 2]]})


class TensorTests(SimpleTestCase):
    def test_tensor_examples(self):
        self.assertEqual(cyclo.tensor_psi(PsiMap({2: 1}), PsiMap({3: 1})), PsiMap({6: 1}))
        self.assertEqual(cyclo.tensor_psi(PsiMap({2: 1}), PsiMap({2: 1})), PsiMap({1: 2}))
        p = PsiMap({4: 1, 6: 2})
        self.assertEqual(cyclo.tensor_psi(p, PsiMap({1: 1})), p)

    def test_tensor_needs_multiplicity_maps(self):
        with self.assertRaises(InvalidInputError):
            cyclo.tensor_psi(PsiMap({2: -1}), PsiMap({1: 1}))

    def test_tensor_char_poly(self):
        plus_one = IntPolynomial((1, 1))
        self.assertEqual(cyclo.tensor_char_poly(plus_one, plus_one), IntPolynomial((1, -2, 1)))


class PolynomialTests(SimpleTestCase):
    def test_char_poly_examples(self):
        self.assertEqual(cyclo.char_poly(PsiMap({1: 1})), IntPolynomial((-1, 1)))
        self.assertEqual(cyclo.char_poly(PsiMap({3: 1})), IntPolynomial((1, 1, 1)))
        self.assertEqual(cyclo.char_poly(PsiMap({1: 1, 2: 1})), IntPolynomial((-1, 0, 1)))

    def test_cyclotomic_polynomials_match_sympy(self):
        for m in range(1, 106):
            expected = [int(c) for c in reversed(Poly(cyclotomic_poly(m, T), T).all_coeffs())]
            self.assertEqual(cyclo.cyclotomic_polynomial(m).coeffs, tuple(expected), m)

    def test_exact_binomial_division(self):
        f = IntPolynomial((1, 1, 1)).times_binomial(5)
        self.assertEqual(f.divide_binomial(5), IntPolynomial((1, 1, 1)))
        with self.assertRaises(ContractViolation):
            IntPolynomial((1, 1, 1)).divide_binomial(2)

    def test_formatting(self):
        self.assertEqual(str(IntPolynomial((1, 0, -2, 1))), "t^3 - 2*t^2 + 1")
        self.assertEqual(cyclo.format_product(PsiMap({1: 2, 3: 1})), "Phi_1^2 * Phi_3")
        self.assertEqual(cyclo.format_product(PsiMap()), "1")

    def test_factorization_rejects_other_zeros(self):
        with self.assertRaises(InvalidInputError):
            cyclo.cyclotomic_factorization(IntPolynomial((-2, 1)))


class GroupRingPropertyTests(SimpleTestCase):
    @given(elements)
    @settings(max_examples=150, deadline=None)
    def test_psi_round_trip(self, a):
        self.assertEqual(cyclo.from_psi(cyclo.to_psi(a)), a)

    @given(elements, elements)
    @settings(max_examples=150, deadline=None)
    def test_trace_degree_and_lefschetz_are_ring_homomorphisms(self, a, b):
        self.assertEqual(cyclo.trace(a * b), cyclo.trace(a) * cyclo.trace(b))
        self.assertEqual(cyclo.degree(a * b), cyclo.degree(a) * cyclo.degree(b))
        for k in (0, 1, 2, 6, 12):
            self.assertEqual(cyclo.lefschetz(a * b, k), cyclo.lefschetz(a, k) * cyclo.lefschetz(b, k))
        self.assertEqual(cyclo.lefschetz(a + b, 4), cyclo.lefschetz(a, 4) + cyclo.lefschetz(b, 4))

    @given(elements)
    @settings(max_examples=150, deadline=None)
    def test_lefschetz_numbers_determine_the_element(self, a):
        D = cyclo.period(a)
        values = {k: cyclo.lefschetz(a, k) for k in divisors(D)}
        self.assertEqual(cyclo.from_lefschetz(values, D), a)

    @given(multiplicity_maps)
    @settings(max_examples=100, deadline=None)
    def test_char_poly_factorization_round_trip(self, p):
        poly = cyclo.char_poly(p)
        self.assertEqual(poly.degree, p.rank)
        self.assertEqual(cyclo.cyclotomic_factorization(poly), p)

    @given(elements, elements, elements)
    @settings(max_examples=100, deadline=None)
    def test_mul_is_commutative_and_associative_with_unit(self, a, b, c):
        self.assertEqual(cyclo.mul(a, b), cyclo.mul(b, a))
        self.assertEqual(cyclo.mul(cyclo.mul(a, b), c), cyclo.mul(a, cyclo.mul(b, c)))
        self.assertEqual(cyclo.mul(a, lambda_element(1)), a)
        self.assertEqual(cyclo.mul(lambda_element(1), a), a)

    @given(psi_values)
    @settings(max_examples=150, deadline=None)
    def test_lambda_round_trip(self, p):
        self.assertEqual(cyclo.to_psi(cyclo.from_psi(p)), p)

    @given(elements, st.integers(min_value=0, max_value=2000))
    @settings(max_examples=150, deadline=None)
    def test_lefschetz_numbers_are_periodic(self, a, k):
        D = cyclo.period(a)
        self.assertEqual(D, ilcm(1, 1, *a.support))
        self.assertEqual(cyclo.lefschetz(a, k), cyclo.lefschetz(a, math.gcd(k, D)))
        self.assertEqual(cyclo.lefschetz(a, k + D), cyclo.lefschetz(a, k))


class DivisorSumTests(SimpleTestCase):
    def test_psi_elements_over_divisors_sum_to_lambda(self):
        for n in range(1, 361):
            total = cyclo.ZERO
            for m in sympy_divisors(n):
                total = total + cyclo.from_psi(PsiMap({m: 1}))
            self.assertEqual(total, lambda_element(n), n)
