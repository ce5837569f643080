# quasihom/singularities/suites.py

"""
Runtime verification suites for `manage.py verify`.

Each suite checks a handful of algebraic identities or theorem-backed
properties, exhaustively where the case space is small and on seeded random
samples otherwise. A property records how many cases it looked at and up to
`MAX_COUNTEREXAMPLES` failing cases.
"""

# Standard library imports
import inspect
import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional

# Local application imports
from . import arith, cyclo
from .blocks import (build_graph, check_condition_I, check_condition_II, check_Sp, check_Tp,
                     covering_char_poly, verify_lemma_2_7, verify_theorem_1_4a)
from .enumeration import SWEEP_CHECKS, SearchSpec, candidates, verify_sweep
from .exceptions import InvalidInputError, QuasihomError
from .orders import (Comparison, ExcellentOrder, OrderTuple, covering_compatible, map_compatible,
                     quadrant, set_compatible, set_compatible_via_center, set_compatible_via_graph,
                     standard_covering, subset_compatible, tensor_tuple, weight_orders)
from .weights import (WeightSystem, check_c2, check_c2bar, concat, divisor, lefschetz_closed_form,
                      milnor_number, psi_w, rho, rho_is_integral, sigma_vs_divisor, st_pairs)

LOGGER = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 5
SUITES = ("cyclo", "weights", "orders", "blocks", "sweeps")


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    counterexamples: List[str] = field(default_factory=list)
    failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, passed: bool, case) -> None:
        self.cases += 1
        if not passed:
            self.failures += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(str(case))

    def to_json(self) -> dict:
        return {
            "name": self.name, "cases": self.cases, "failures": self.failures,
            "counterexamples": self.counterexamples, "ok": self.ok,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: Optional[int]
    properties: List[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "properties": [p.to_json() for p in self.properties],
            "ok": self.ok,
        }


def _check(prop: PropertyResult, case, predicate: Callable[[], bool]) -> None:
    try:
        passed = bool(predicate())
    except QuasihomError as e:
        LOGGER.error(f"{prop.name} raised on {case}: {e}")
        passed = False
    prop.record(passed, case)


# ==============================================================================
# RANDOM OBJECTS
# ==============================================================================

def random_element(rng: random.Random, max_index: int = 30, terms: int = 4) -> cyclo.CycloElement:
    return cyclo.CycloElement({
        rng.randint(1, max_index): Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        for _ in range(rng.randint(0, terms))
    })


def random_weight_system(rng: random.Random, max_n: int = 4, max_d: int = 60) -> WeightSystem:
    d = rng.randint(2, max_d)
    n = rng.randint(1, max_n)
    return WeightSystem(tuple(rng.randint(1, d - 1) for _ in range(n)), d)


def random_c2_system(rng: random.Random, max_n: int = 3, max_d: int = 60, tries: int = 10_000) -> WeightSystem:
    for _ in range(tries):
        ws = random_weight_system(rng, max_n, max_d)
        if check_c2(ws):
            return ws
    raise InvalidInputError(f"No (C2) system found in {tries} draws")


def random_tuple(rng: random.Random, primes=(2, 3, 5), max_vertices: int = 12) -> OrderTuple:
    """A random order tuple whose quadrant has at most `max_vertices` vertices."""
    orders: Dict[int, ExcellentOrder] = {}
    size = 1
    for p in primes:
        s = rng.randint(0, 3)
        while s and size * (s + 1) > max_vertices:
            s -= 1
        size *= s + 1
        S = frozenset(k for k in range(1, s + 1) if rng.random() < 0.5)
        orders[p] = ExcellentOrder(s, S)
    return OrderTuple.from_dict(orders)


def small_tuples(primes=(2, 3, 5), max_vertices: int = 12) -> Iterator[OrderTuple]:
    """Every order tuple on `primes` whose quadrant has at most `max_vertices` vertices."""
    def extend(i: int, size: int, chosen: Dict[int, ExcellentOrder]) -> Iterator[OrderTuple]:
        if i == len(primes):
            yield OrderTuple.from_dict(chosen)
            return
        s = 0
        while size * (s + 1) <= max_vertices:
            for S in _powerset(range(1, s + 1)):
                yield from extend(i + 1, size * (s + 1), {**chosen, primes[i]: ExcellentOrder(s, S)})
            s += 1

    yield from extend(0, 1, {})


def _powerset(items: Iterable[int], smallest: int = 0) -> Iterable[frozenset]:
    items = sorted(items)
    for r in range(smallest, len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


# ==============================================================================
# SUITES
# ==============================================================================

def cyclo_suite(rng: random.Random, cases: int = 200) -> List[PropertyResult]:
    moebius_sum = PropertyResult("moebius_divisor_sum")
    for m in range(1, 10_001):
        _check(moebius_sum, m, lambda: sum(arith.moebius(k) for k in arith.divisors(m)) == (1 if m == 1 else 0))
    phi_sum = PropertyResult("euler_phi_divisor_sum")
    for m in range(1, 10_001):
        _check(phi_sum, m, lambda: sum(arith.euler_phi(k) for k in arith.divisors(m)) == m)

    round_trip = PropertyResult("psi_basis_round_trip")
    homomorphism = PropertyResult("trace_degree_lefschetz_multiplicative")
    lefschetz = PropertyResult("moebius_inversion_of_lefschetz_numbers")
    ring = PropertyResult("mul_commutative_associative_with_unit")
    periodic = PropertyResult("lefschetz_periodic_in_gcd_with_period")
    psi_round_trip = PropertyResult("lambda_basis_round_trip")
    for _ in range(cases):
        a, b, c = random_element(rng), random_element(rng), random_element(rng)
        _check(round_trip, a, lambda: cyclo.from_psi(cyclo.to_psi(a)) == a)
        k = rng.randint(1, 60)
        _check(homomorphism, (a, b, k), lambda: (
            cyclo.trace(a * b) == cyclo.trace(a) * cyclo.trace(b)
            and cyclo.degree(a * b) == cyclo.degree(a) * cyclo.degree(b)
            and cyclo.lefschetz(a * b, k) == cyclo.lefschetz(a, k) * cyclo.lefschetz(b, k)
        ))
        D = cyclo.period(a)
        _check(lefschetz, a, lambda: cyclo.from_lefschetz(
            {k: cyclo.lefschetz(a, k) for k in arith.divisors(D)}, D) == a)
        _check(ring, (a, b, c), lambda: (
            cyclo.mul(a, b) == cyclo.mul(b, a)
            and cyclo.mul(cyclo.mul(a, b), c) == cyclo.mul(a, cyclo.mul(b, c))
            and cyclo.mul(a, cyclo.lambda_element(1)) == a
        ))
        k = rng.randint(0, 720)
        _check(periodic, (a, k), lambda: cyclo.lefschetz(a, k) == cyclo.lefschetz(a, math.gcd(k, D)))
        p = cyclo.PsiMap({rng.randint(1, 30): Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                          for _ in range(rng.randint(0, 4))})
        _check(psi_round_trip, p, lambda: cyclo.to_psi(cyclo.from_psi(p)) == p)

    divisor_sum = PropertyResult("psi_elements_over_divisors_sum_to_lambda")
    for n in range(1, 361):
        _check(divisor_sum, n, lambda: sum(
            (cyclo.from_psi(cyclo.PsiMap({m: 1})) for m in arith.divisors(n)), cyclo.ZERO
        ) == cyclo.lambda_element(n))

    factorization = PropertyResult("char_poly_factorization_round_trip")
    for _ in range(cases // 4):
        psi = cyclo.PsiMap({rng.randint(1, 24): rng.randint(1, 2) for _ in range(rng.randint(1, 3))})
        _check(factorization, psi, lambda: cyclo.cyclotomic_factorization(cyclo.char_poly(psi)) == psi)
    return [moebius_sum, phi_sum, round_trip, homomorphism, lefschetz, ring, periodic, psi_round_trip,
            divisor_sum, factorization]


def weights_suite(rng: random.Random, cases: int = 200) -> List[PropertyResult]:
    closed_form = PropertyResult("lefschetz_closed_form")
    c2_implies = PropertyResult("c2_implies_c2bar")
    integral = PropertyResult("c2bar_gives_integral_rho_and_milnor")
    nonneg = PropertyResult("c2_gives_multiplicity_map_and_nonnegative_rho")
    sigma = PropertyResult("sigma_matches_divisor")
    for _ in range(cases):
        ws = random_weight_system(rng, max_n=4, max_d=40)
        D = divisor(ws)
        d_w = st_pairs(ws).d_w
        _check(closed_form, ws, lambda: all(
            cyclo.lefschetz(D, k) == lefschetz_closed_form(ws, k) for k in arith.divisors(d_w)))
        c2, c2bar = check_c2(ws), check_c2bar(ws)
        _check(c2_implies, ws, lambda: c2bar or not c2)
        if c2bar:
            _check(integral, ws, lambda: rho_is_integral(ws) and milnor_number(ws).denominator == 1
                   and rho(ws).total == milnor_number(ws) == cyclo.degree(D))
            _check(sigma, ws, lambda: sigma_vs_divisor(ws))
        if c2:
            _check(nonneg, ws, lambda: psi_w(ws).is_multiplicity_map and rho(ws).is_nonnegative)

    concat_identity = PropertyResult("concat_divisor_is_product")
    for _ in range(cases):
        ws1 = random_weight_system(rng, max_n=2, max_d=30)
        ws2 = random_weight_system(rng, max_n=2, max_d=30)
        _check(concat_identity, (str(ws1), str(ws2)),
               lambda: divisor(concat(ws1, ws2)) == divisor(ws1) * divisor(ws2))

    small_n = PropertyResult("c2_equals_c2bar_for_at_most_three_variables")
    for n in (1, 2, 3):
        for d in range(3, 41):
            for v in candidates(n, d, prune=False):
                ws = WeightSystem(v, d)
                _check(small_n, ws, lambda: check_c2(ws) == check_c2bar(ws))
    return [closed_form, c2_implies, integral, nonneg, sigma, concat_identity, small_n]


def orders_suite(rng: random.Random, cases: int = 200, max_vertices: int = 12) -> List[PropertyResult]:
    chain = PropertyResult("subset_compatible_matches_definition")
    for s in range(0, 7):
        for S in _powerset(range(1, s + 1)):
            o = ExcellentOrder(s, S)
            for K in _powerset(range(s + 1)):
                by_bound = K == frozenset(range(s + 1)) or any(
                    K == {k for k in range(s + 1) if o.compare(k, bound) is Comparison.GREATER}
                    for bound in range(s + 1)
                )
                _check(chain, (o.to_json(), sorted(K)), lambda: subset_compatible(K, o) == by_bound)

    algebra = PropertyResult("tensor_commutative_associative_with_unit")
    for _ in range(cases):
        o1, o2, o3 = (ExcellentOrder(s, frozenset(k for k in range(1, s + 1) if rng.random() < 0.5))
                      for s in (rng.randint(0, 6) for _ in range(3)))
        _check(algebra, (o1, o2, o3), lambda: (
            o1.tensor(o2) == o2.tensor(o1)
            and o1.tensor(o2).tensor(o3) == o1.tensor(o2.tensor(o3))
            and o1.tensor(ExcellentOrder.trivial()) == o1
        ))

    agreement = PropertyResult("three_set_compatibility_criteria_agree")
    for t in small_tuples(max_vertices=max_vertices):
        for M in _powerset(quadrant(t).vertices, smallest=1):
            _check(agreement, (t, M), lambda: (
                set_compatible(M, t) == set_compatible_via_graph(M, t) == set_compatible_via_center(M, t)
            ))

    covering = PropertyResult("map_compatible_iff_standard_covering_compatible")
    for _ in range(max(cases // 20, 1)):
        t = random_tuple(rng)
        vertices = quadrant(t).vertices
        for _ in range(20):
            psi = cyclo.PsiMap({m: rng.randint(0, 3) for m in vertices})
            _check(covering, (t.to_json(), psi), lambda: (
                map_compatible(psi, t) == covering_compatible(standard_covering(psi), t)
            ))

    preservation = PropertyResult("tensor_preserves_compatibility")
    for _ in range(cases):
        ws1, ws2 = random_c2_system(rng), random_c2_system(rng)
        psi = cyclo.tensor_psi(psi_w(ws1), psi_w(ws2))
        t = tensor_tuple(weight_orders(ws1), weight_orders(ws2))
        _check(preservation, (str(ws1), str(ws2)), lambda: map_compatible(psi, t))
    return [chain, algebra, agreement, covering, preservation]


def blocks_suite(rng: random.Random, cases: int = 200) -> List[PropertyResult]:
    sp_tp = PropertyResult("connected_Sp_implies_Tp")
    exclusive = PropertyResult("conditions_I_and_II_exclusive")
    for _ in range(cases * 5):
        M = frozenset(rng.randint(1, 200) for _ in range(rng.randint(1, 6)))
        g = build_graph(M)
        _check(exclusive, sorted(M), lambda: not (check_condition_I(g) and check_condition_II(g)))
        if g.is_connected:
            for p in set(g.primes) | {2}:
                _check(sp_tp, (sorted(M), p), lambda: check_Tp(g, p) or not check_Sp(g, p))

    lemma = PropertyResult("compatible_sets_satisfy_condition_I")
    for _ in range(max(cases // 20, 1)):
        t = random_tuple(rng)
        for M in _powerset(quadrant(t).vertices, smallest=1):
            if set(arith.primes_of(M)) <= set(t.primes) and set_compatible(M, t):
                _check(lemma, (t.to_json(), sorted(M)), lambda: verify_lemma_2_7(M, t))

    covering = PropertyResult("standard_covering_members_satisfy_condition_I")
    product = PropertyResult("block_polynomials_multiply_to_char_poly")
    for _ in range(cases // 2):
        ws = random_c2_system(rng)
        _check(covering, ws, lambda: verify_theorem_1_4a(ws))
        psi = psi_w(ws)
        _check(product, ws, lambda: (
            covering_char_poly(standard_covering(psi)) == cyclo.char_poly(psi)
            and cyclo.char_poly(psi).degree == milnor_number(ws)
        ))
    return [sp_tp, exclusive, lemma, covering, product]


def sweeps_suite(rng: random.Random, d_max: int = 100, workers: Optional[int] = None) -> List[PropertyResult]:
    results = []
    for n in range(1, 5):
        report = verify_sweep(SearchSpec(n, d_max), SWEEP_CHECKS, workers=workers)
        for name in SWEEP_CHECKS:
            prop = PropertyResult(f"{name}_n{n}_d{d_max}", cases=report.checked[name])
            prop.failures = len(report.violations[name])
            prop.counterexamples = report.violations[name][:MAX_COUNTEREXAMPLES]
            results.append(prop)
    return results


SUITE_FUNCTIONS = {
    "cyclo": cyclo_suite,
    "weights": weights_suite,
    "orders": orders_suite,
    "blocks": blocks_suite,
    "sweeps": sweeps_suite,
}


def run_suite(name: str, seed: Optional[int] = None, **options) -> List[SuiteReport]:
    """Runs one suite, or every suite for "all"."""
    if name != "all" and name not in SUITE_FUNCTIONS:
        raise InvalidInputError(f"Unknown suite {name!r}; choose one of {', '.join(SUITES)} or all")
    names = SUITES if name == "all" else (name,)
    reports = []
    for suite in names:
        rng = random.Random(seed)
        function = SUITE_FUNCTIONS[suite]
        accepted = inspect.signature(function).parameters
        kwargs = {k: v for k, v in options.items() if k in accepted and v is not None}
        report = SuiteReport(suite, seed, function(rng, **kwargs))
        for prop in report.properties:
            LOGGER.info(f"[{suite}] {prop.name}: {prop.cases} cases, {prop.failures} failures")
        reports.append(report)
    return reports
