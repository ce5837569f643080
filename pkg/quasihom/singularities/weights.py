# quasihom/singularities/weights.py

"""
Weight systems and everything the combinatorics attaches to them.

A weight system (v_1, ..., v_n; d) is a tuple of positive integers with v_i < d.
This module decides the conditions (C2) and (C2-bar), builds the divisor D_w of
the monodromy's characteristic polynomial, the polynomial rho whose exponents
are the spectrum, the Milnor number, Thom-Sebastiani concatenation, and the two
forms of Saito's conjecture.

Conditions and invariants are computed on the system as given; callers reduce
explicitly with `reduce` when they need the reduced representative.
"""

# Standard library imports
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

# Local application imports
from .arith import divisors, euler_phi, gcd_all, lcm_all
from .cyclo import ONE, CycloElement, IntPolynomial, PsiMap, lambda_element, to_psi
from .exceptions import ContractViolation, InvalidInputError, NotIntegralError, PreconditionError

LOGGER = logging.getLogger(__name__)

# The fixed pair order (J_1, ..., J_6) used by `a_tuple`.
A_TUPLE_PAIRS = tuple(combinations(range(4), 2))


# ==============================================================================
# DOMAIN TYPES
# ==============================================================================

@dataclass(frozen=True)
class WeightSystem:
    """
    An integer weight system (v_1, ..., v_n; d), not necessarily reduced.

    Attributes:
        v (tuple[int, ...]): the weights v_1..v_n, each in [1, d - 1].
        d (int): the degree.
    """
    v: Tuple[int, ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(self.v))
        if not self.v:
            raise InvalidInputError("A weight system needs at least one weight")
        for x in (*self.v, self.d):
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise InvalidInputError(f"Weights and degree must be positive integers, got {x!r}")
        if any(x >= self.d for x in self.v):
            raise InvalidInputError(f"Every weight must be smaller than d = {self.d}, got {self.v}")

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def is_reduced(self) -> bool:
        return gcd_all((*self.v, self.d)) == 1

    @classmethod
    def parse(cls, text: str, degree: int) -> "WeightSystem":
        """Parses a comma-separated weight list such as "27,16,10,1"."""
        try:
            v = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
        except ValueError as e:
            raise InvalidInputError(f"Cannot parse weights {text!r}: {e}") from e
        return cls(v, int(degree))

    @classmethod
    def from_normalized(cls, weights: Iterable) -> "WeightSystem":
        """The reduced integer system of normalized weights w_i in (0, 1)."""
        try:
            ws = [Fraction(w) for w in weights]
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"Cannot parse normalized weights: {e}") from e
        if not ws or any(not 0 < w < 1 for w in ws):
            raise InvalidInputError(f"Normalized weights must lie in (0, 1), got {ws}")
        d = lcm_all(w.denominator for w in ws)
        return reduce(cls(tuple(int(w * d) for w in ws), d))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.v))};{self.d})"

    def to_json(self) -> dict:
        return {"weights": list(self.v), "d": self.d}


@dataclass(frozen=True)
class ReducedWeights:
    """
    The coprime pairs s_i / t_i = v_i / d and d_w = lcm(t_1, ..., t_n).
    """
    pairs: Tuple[Tuple[int, int], ...]
    d_w: int

    @property
    def s(self) -> Tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def t(self) -> Tuple[int, ...]:
        return tuple(t for _, t in self.pairs)


class SigmaMap:
    """
    rho = sum sigma(alpha) * t^(d * alpha), keyed by the exponent alpha.

    Exponents are exact fractions in lowest terms; zero values are not stored.
    """
    __slots__ = ("_items",)

    def __init__(self, values: Dict[Fraction, int]):
        self._items = tuple(sorted((Fraction(a), int(c)) for a, c in values.items() if c))

    def items(self) -> Tuple[Tuple[Fraction, int], ...]:
        return self._items

    def __getitem__(self, alpha) -> int:
        alpha = Fraction(alpha)
        for a, c in self._items:
            if a == alpha:
                return c
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, SigmaMap):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"SigmaMap({dict(self._items)})"

    @property
    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self._items)

    @property
    def total(self) -> int:
        """sum sigma(alpha) = rho(1), the Milnor number."""
        return sum(c for _, c in self._items)

    def exponents(self) -> List[Fraction]:
        """The exponents with multiplicity, ascending; needs sigma >= 0."""
        if not self.is_nonnegative:
            raise PreconditionError("Exponents need a nonnegative sigma map")
        return [a for a, c in self._items for _ in range(c)]

    def to_psi(self) -> PsiMap:
        """
        Groups sum sigma(alpha) [exp(2 pi i alpha)] by the order of the unit root.

        The group-ring element lies in the span of the Psi_m only if all
        primitive m-th roots carry the same coefficient; otherwise this raises
        ContractViolation.
        """
        at_root: Dict[Fraction, int] = {}
        for alpha, c in self._items:
            key = alpha - math.floor(alpha)
            at_root[key] = at_root.get(key, 0) + c
        psi: Dict[int, int] = {}
        for m in sorted({key.denominator for key in at_root}):
            coeffs = {at_root.get(Fraction(a, m), 0) for a in range(m) if math.gcd(a, m) == 1}
            if len(coeffs) != 1:
                raise ContractViolation(f"Primitive {m}-th roots carry different coefficients {sorted(coeffs)}")
            psi[m] = coeffs.pop()
        return PsiMap(psi)

    def to_json(self) -> list:
        return [[a.numerator, a.denominator, c] for a, c in self._items]


# ==============================================================================
# EQUIVALENCE
# ==============================================================================

def reduce(ws: WeightSystem) -> WeightSystem:
    """Divides through by gcd(v_1, ..., v_n, d)."""
    g = gcd_all((*ws.v, ws.d))
    return WeightSystem(tuple(x // g for x in ws.v), ws.d // g)


def normalize(ws: WeightSystem) -> List[Fraction]:
    return [Fraction(x, ws.d) for x in ws.v]


def equivalent(ws1: WeightSystem, ws2: WeightSystem) -> bool:
    """True iff one system is a positive rational multiple of the other."""
    return reduce(ws1) == reduce(ws2)


def has_multiplicity_three(ws: WeightSystem) -> bool:
    """All normalized weights lie in (0, 1/2)."""
    return all(2 * x < ws.d for x in ws.v)


# ==============================================================================
# REDUCED FRACTIONS, M(k), mu(k)
# ==============================================================================

@lru_cache(maxsize=65536)
def st_pairs(ws: WeightSystem) -> ReducedWeights:
    pairs = []
    for x in ws.v:
        g = math.gcd(x, ws.d)
        pairs.append((x // g, ws.d // g))
    return ReducedWeights(tuple(pairs), lcm_all(t for _, t in pairs))


def m_set(ws: WeightSystem, k: int) -> frozenset:
    """M(k) = {j : t_j | k}, with 1-based indices."""
    if not isinstance(k, int) or k < 1:
        raise InvalidInputError(f"k must be a positive integer, got {k!r}")
    return frozenset(j for j, t in enumerate(st_pairs(ws).t, start=1) if k % t == 0)


def mu_k(ws: WeightSystem, k: int) -> Fraction:
    """prod over j in M(k) of (d - v_j) / v_j; the empty product is 1."""
    result = Fraction(1)
    for j in m_set(ws, k):
        x = ws.v[j - 1]
        result *= Fraction(ws.d - x, x)
    return result


def milnor_number(ws: WeightSystem) -> Fraction:
    """prod (d - v_j) / v_j, an integer whenever (C2-bar) holds."""
    result = Fraction(1)
    for x in ws.v:
        result *= Fraction(ws.d - x, x)
    return result


# ==============================================================================
# SEMIGROUPS AND THE CONDITIONS (C2), (C2-bar)
# ==============================================================================

@lru_cache(maxsize=65536)
def semigroup_bits(generators: Tuple[int, ...], bound: int) -> int:
    """
    Reachability of 0..bound by nonnegative combinations of the generators.

    Bit k of the result is set iff k lies in the numerical semigroup. This is
    the coin-change table kept as a Python integer bitset: each generator g is
    folded in with shifts by g, 2g, 4g, ... until the shift exceeds the bound.
    """
    mask = (1 << (bound + 1)) - 1
    reach = 1
    for g in generators:
        step = g
        while step <= bound:
            reach |= (reach << step) & mask
            step <<= 1
    return reach


def _subset_generators(ws: WeightSystem, J: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted({ws.v[j] for j in J}))


def semigroup_member(ws: WeightSystem, J: Iterable[int], k: int) -> bool:
    """True iff k is a nonnegative combination of v_j for j in J (1-based)."""
    J = tuple(J)
    if not J:
        raise InvalidInputError("J must be nonempty")
    if any(not 1 <= j <= ws.n for j in J):
        raise InvalidInputError(f"J must be a subset of 1..{ws.n}, got {J}")
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    if k == 0:
        return True
    bits = semigroup_bits(_subset_generators(ws, (j - 1 for j in J)), max(k, ws.d))
    return bool(bits >> k & 1)


def singleton_gcd_ok(ws: WeightSystem) -> bool:
    """(C2-bar) restricted to |J| = 1: each v_j divides some d - v_k."""
    return all(any((ws.d - y) % x == 0 for y in ws.v) for x in ws.v)


def check_c2bar(ws: WeightSystem) -> bool:
    """
    (C2-bar) in its (GCD) form.

    For every nonempty J, gcd(v_j : j in J) divides at least |J| of the
    numbers d - v_k. Singletons run first, since most systems fail there.
    """
    if not singleton_gcd_ok(ws):
        return False
    targets = [ws.d - x for x in ws.v]
    for size in range(2, ws.n + 1):
        for J in combinations(range(ws.n), size):
            g = gcd_all(ws.v[j] for j in J)
            if sum(1 for y in targets if y % g == 0) < size:
                return False
    return True


def c2_counts(ws: WeightSystem, J: Sequence[int]) -> int:
    """|{k : d - v_k in SG(J)}| for a 0-based index set J."""
    bits = semigroup_bits(_subset_generators(ws, J), ws.d)
    return sum(1 for x in ws.v if bits >> (ws.d - x) & 1)


def check_c2(ws: WeightSystem) -> bool:
    """
    (C2): for every nonempty J some K with |K| = |J| has d - v_k in SG(J) for
    all k in K, i.e. at least |J| of the numbers d - v_k lie in SG(J).
    """
    for size in range(1, ws.n + 1):
        for J in combinations(range(ws.n), size):
            if c2_counts(ws, J) < size:
                return False
    return True


def a_tuple(ws: WeightSystem) -> List[int]:
    """The six counts a_i for the pairs {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}."""
    if ws.n != 4:
        raise InvalidInputError(f"a_tuple needs n = 4, got n = {ws.n}")
    return [c2_counts(ws, J) for J in A_TUPLE_PAIRS]


# ==============================================================================
# THE DIVISOR D_w AND ITS LEFSCHETZ NUMBERS
# ==============================================================================

@lru_cache(maxsize=65536)
def divisor(ws: WeightSystem) -> CycloElement:
    """D_w = prod over j of (Lambda_{t_j} / s_j - Lambda_1)."""
    result = ONE
    for s, t in st_pairs(ws).pairs:
        result = result * (lambda_element(t) * Fraction(1, s) - ONE)
    return result


def psi_w(ws: WeightSystem) -> PsiMap:
    """The Psi-coordinates of D_w; a multiplicity map for (C2) systems."""
    return to_psi(divisor(ws))


def lefschetz_closed_form(ws: WeightSystem, k: int) -> Fraction:
    """L_k(D_w) = (-1)^(n - |M(k)|) * mu(k)."""
    sign = -1 if (ws.n - len(m_set(ws, k))) % 2 else 1
    return sign * mu_k(ws, k)


# ==============================================================================
# THE POLYNOMIAL rho
# ==============================================================================

def rho_obstruction(ws: WeightSystem) -> Optional[int]:
    """
    The smallest m whose cyclotomic factor Phi_m occurs more often in the
    denominator prod (t^{v_j} - 1) than in the numerator prod (t^{d - v_j} - 1),
    or None if rho is a polynomial.
    """
    candidates = sorted({m for x in ws.v for m in divisors(x)})
    for m in candidates:
        above = sum(1 for x in ws.v if (ws.d - x) % m == 0)
        below = sum(1 for x in ws.v if x % m == 0)
        if above < below:
            return m
    return None


def rho_is_integral(ws: WeightSystem) -> bool:
    return rho_obstruction(ws) is None


@lru_cache(maxsize=4096)
def rho(ws: WeightSystem) -> SigmaMap:
    """
    rho = t^(v_1 + ... + v_n) * prod (t^{d - v_j} - 1) / (t^{v_j} - 1).

    The numerator is expanded first and then divided exactly by each
    denominator factor, so every intermediate division is exact.
    """
    witness = rho_obstruction(ws)
    if witness is not None:
        raise NotIntegralError(f"rho of {ws} is not a polynomial: Phi_{witness} is not cancelled", witness)
    poly = IntPolynomial.one()
    for x in ws.v:
        poly = poly.times_binomial(ws.d - x)
    for x in ws.v:
        poly = poly.divide_binomial(x)
    shift = sum(ws.v)
    return SigmaMap({Fraction(shift + e, ws.d): c for e, c in enumerate(poly.coeffs) if c})


def exponents(ws: WeightSystem) -> List[Fraction]:
    return rho(ws).exponents()


def sigma_vs_divisor(ws: WeightSystem) -> bool:
    """True iff the exponents of rho, grouped by unit root, give back D_w."""
    if not check_c2bar(ws):
        raise PreconditionError(f"{ws} does not satisfy (C2-bar)")
    try:
        grouped = rho(ws).to_psi()
    except ContractViolation as e:
        LOGGER.warning(f"sigma map of {ws} is not Galois invariant: {e}")
        return False
    return grouped == psi_w(ws)


# ==============================================================================
# THOM-SEBASTIANI SUMS AND SAITO'S CONJECTURE
# ==============================================================================

def concat(ws1: WeightSystem, ws2: WeightSystem) -> WeightSystem:
    """The weight system of the Thom-Sebastiani sum: common degree lcm(d1, d2)."""
    d = math.lcm(ws1.d, ws2.d)
    return WeightSystem(
        tuple(x * (d // ws1.d) for x in ws1.v) + tuple(x * (d // ws2.d) for x in ws2.v),
        d,
    )


def _require_c2(ws: WeightSystem) -> None:
    if not check_c2(ws):
        raise PreconditionError(f"{ws} does not satisfy (C2); the Saito conditions need a singularity")


def saito_value(ws: WeightSystem) -> Fraction:
    """psi_w(d_w)."""
    _require_c2(ws)
    return psi_w(ws)[st_pairs(ws).d_w]


def saito_strong(ws: WeightSystem) -> bool:
    return saito_value(ws) > 0


def saito_weak(ws: WeightSystem) -> bool:
    """psi_w(d_w) > 0 or psi_w(d_w / 2) > 0."""
    _require_c2(ws)
    d_w = st_pairs(ws).d_w
    psi = psi_w(ws)
    if psi[d_w] > 0:
        return True
    return d_w % 2 == 0 and psi[d_w // 2] > 0


def rank_check(ws: WeightSystem) -> bool:
    """sum psi_w(m) * phi(m) equals the Milnor number."""
    return sum(c * euler_phi(m) for m, c in psi_w(ws).items()) == milnor_number(ws)
