# quasihom/singularities/tests/test_blocks.py

import itertools

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from singularities import blocks
from singularities.cyclo import IntPolynomial, PsiMap, char_poly
from singularities.exceptions import InvalidInputError, PreconditionError
from singularities.orders import ExcellentOrder, OrderTuple, quadrant, set_compatible, standard_covering
from singularities.weights import WeightSystem, check_c2, psi_w

sets_of_integers = st.frozensets(st.integers(min_value=1, max_value=120), min_size=1, max_size=6)


class GraphTests(SimpleTestCase):
    def test_build_graph(self):
        self.assertEqual(blocks.build_graph({1, 2, 4}).edges(), [(2, 1), (4, 1), (4, 2)])
        self.assertEqual(blocks.build_graph({1, 2, 4}).edges(3), [])
        self.assertEqual(blocks.build_graph({2, 3}).edges(), [])
        self.assertEqual(blocks.build_graph({6}).edges(), [])
        self.assertEqual(blocks.build_graph({1, 2, 3, 6}).edges(3), [(3, 1), (6, 2)])

    def test_rejects_empty_or_non_positive(self):
        with self.assertRaises(InvalidInputError):
            blocks.build_graph(set())
        with self.assertRaises(InvalidInputError):
            blocks.build_graph({0, 1})

    def test_p_planes(self):
        g = blocks.build_graph({1, 2, 4})
        self.assertEqual(blocks.p_planes(g, 2), [{1}, {2}, {4}])
        self.assertEqual(blocks.p_planes(g, 3), [{1, 2, 4}])
        self.assertEqual(blocks.p_planes(blocks.build_graph({2, 3}), 2), [{2}, {3}])

    def test_highest_planes_and_edges(self):
        g = blocks.build_graph({1, 2, 4})
        self.assertEqual(blocks.highest_p_planes(g, 2), [{4}])
        self.assertEqual(blocks.highest_p_edges(g, 2), [(4, 1), (4, 2)])
        self.assertEqual(blocks.highest_p_planes(g, 3), [{1, 2, 4}])
        self.assertEqual(blocks.highest_p_planes(blocks.build_graph({2, 3}), 3), [{2}, {3}])

    def test_tp_and_sp(self):
        g = blocks.build_graph({1, 2, 4})
        self.assertTrue(blocks.check_Tp(g, 2))
        self.assertTrue(blocks.check_Sp(g, 2))
        disconnected = blocks.build_graph({2, 3})
        for p in (2, 3, 5):
            self.assertFalse(blocks.check_Tp(disconnected, p))
        single = blocks.build_graph({6})
        for p in (2, 3, 5):
            self.assertTrue(blocks.check_Tp(single, p))
            self.assertTrue(blocks.check_Sp(single, p))


class ConditionTests(SimpleTestCase):
    def test_condition_I(self):
        self.assertTrue(blocks.check_condition_I(blocks.build_graph({1, 2, 4})))
        self.assertFalse(blocks.check_condition_I(blocks.build_graph({2, 3})))

    def test_condition_II(self):
        self.assertTrue(blocks.check_condition_II(blocks.build_graph({2, 3})))
        self.assertFalse(blocks.check_condition_II(blocks.build_graph({1, 2, 4})))
        self.assertFalse(blocks.check_condition_II(blocks.build_graph({3, 4, 8})))

    def test_verdict(self):
        self.assertEqual(blocks.verdict({4, 2, 1}), {
            "M": [1, 2, 4],
            "connected": True,
            "failing_condition": None,
            "condition_I": True,
            "condition_II": False,
        })
        self.assertFalse(blocks.verdict({2, 3})["connected"])

    def test_failing_condition(self):
        self.assertIsNone(blocks.failing_condition(blocks.build_graph({1, 2, 4})))
        self.assertEqual(blocks.failing_condition(blocks.build_graph({2, 3, 5})), "S_2")
        self.assertEqual(blocks.failing_condition(blocks.build_graph({2, 3})), "T_p:3")

    @given(sets_of_integers)
    @settings(max_examples=300, deadline=None)
    def test_conditions_I_and_II_are_exclusive(self, M):
        g = blocks.build_graph(M)
        self.assertFalse(blocks.check_condition_I(g) and blocks.check_condition_II(g))

    @given(sets_of_integers)
    @settings(max_examples=300, deadline=None)
    def test_condition_I_is_the_verdict_of_a_connected_graph(self, M):
        g = blocks.build_graph(M)
        result = blocks.verdict(M)
        self.assertEqual(result["condition_I"], g.is_connected and result["failing_condition"] is None)
        if result["condition_II"]:
            self.assertEqual(len(g.components()), 2)

    @given(sets_of_integers)
    @settings(max_examples=300, deadline=None)
    def test_sp_implies_tp_on_connected_graphs(self, M):
        g = blocks.build_graph(M)
        if not g.is_connected:
            return
        for p in set(g.primes) | {2}:
            self.assertTrue(blocks.check_Tp(g, p) or not blocks.check_Sp(g, p), p)


class OrlikBlockTests(SimpleTestCase):
    def test_orlik_block(self):
        block = blocks.orlik_block({1})
        self.assertEqual((block.rank, block.charpoly), (1, IntPolynomial((-1, 1))))
        block = blocks.orlik_block({1, 2, 3})
        self.assertEqual(block.rank, 4)
        self.assertEqual(block.charpoly, IntPolynomial((-1, 1)) * IntPolynomial((1, 1)) * IntPolynomial((1, 1, 1)))
        self.assertEqual(blocks.orlik_block({3}).to_json(), {"M": [3], "rank": 2, "charpoly": "t^2 + t + 1"})

    def test_covering_char_poly(self):
        psi = PsiMap({1: 2, 3: 1, 6: 1})
        self.assertEqual(blocks.covering_char_poly(standard_covering(psi)), char_poly(psi))


class TheoremCheckTests(SimpleTestCase):
    def test_standard_covering_members_satisfy_condition_I(self):
        self.assertTrue(blocks.verify_theorem_1_4a(WeightSystem((1,), 3)))
        with self.assertRaises(PreconditionError):
            blocks.verify_theorem_1_4a(WeightSystem((27, 16, 10, 1), 81))

    def test_small_c2_systems(self):
        for d in range(3, 25):
            for v in itertools.combinations_with_replacement(range(1, (d + 1) // 2), 3):
                ws = WeightSystem(v, d)
                if check_c2(ws):
                    self.assertTrue(blocks.verify_theorem_1_4a(ws), ws)
                    psi = psi_w(ws)
                    self.assertEqual(blocks.covering_char_poly(standard_covering(psi)), char_poly(psi))

    def test_compatible_sets_examples(self):
        t3 = OrderTuple.from_dict({3: ExcellentOrder(1, frozenset({1}))})
        self.assertTrue(blocks.verify_lemma_2_7({1, 3}, t3))
        t2 = OrderTuple.from_dict({2: ExcellentOrder(2, frozenset({2, 1}))})
        self.assertTrue(blocks.verify_lemma_2_7({1, 2, 4}, t2))
        with self.assertRaises(PreconditionError):
            blocks.verify_lemma_2_7({1}, t3)

    def test_compatible_sets_of_small_quadrants(self):
        t = OrderTuple.from_dict({
            2: ExcellentOrder(2, frozenset({1})),
            3: ExcellentOrder(1, frozenset({1})),
            5: ExcellentOrder(1),
        })
        vertices = sorted(quadrant(t).vertices)
        for r in range(1, len(vertices) + 1):
            for M in itertools.combinations(vertices, r):
                if set_compatible(M, t):
                    self.assertTrue(blocks.verify_lemma_2_7(M, t), M)
