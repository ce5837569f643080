# quasihom/singularities/orders.py

"""
Excellent orders, quadrant graphs and compatibility.

An excellent order on {0, ..., s} is fixed by the set S of elements above 0:
S is ordered by >, the rest by <, and every element of S u {0} sits above every
element outside it. Orders are materialized as their descending chain.

A tuple of excellent orders, one per prime, spans a quadrant graph whose
vertices are products of prime powers and whose p-edges run inside the p-fibers
in the direction of the p-th order. Sets, multiplicity maps and coverings are
compatible with a tuple when they are closed upwards along these edges.

Every compatibility check works on the whole tuple: each prime of P(M) must
have an order, and the fibers of every prime of the tuple are checked.
"""

# Standard library imports
import enum
import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

# Third-party imports
import networkx as nx

# Local application imports
from .arith import is_prime, pi_p, primes_of, v_p
from .cyclo import PsiMap
from .exceptions import InvalidInputError, MissingPrimeError, PreconditionError
from .weights import WeightSystem, check_c2, psi_w, st_pairs

LOGGER = logging.getLogger(__name__)


class Comparison(enum.Enum):
    GREATER = "greater"
    EQUAL = "equal"
    LESS = "less"


# ==============================================================================
# EXCELLENT ORDERS
# ==============================================================================

@dataclass(frozen=True)
class ExcellentOrder:
    """
    The excellent order on {0, ..., s} with S = {k : k > 0 in the order}.

    Attributes:
        s (int): the bound s(>).
        S (frozenset[int]): a subset of {1, ..., s}.
    """
    s: int
    S: FrozenSet[int] = frozenset()
    chain: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _rank: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s < 0:
            raise InvalidInputError(f"The bound s must be a nonnegative integer, got {self.s!r}")
        S = frozenset(self.S)
        if any(not isinstance(k, int) or not 1 <= k <= self.s for k in S):
            raise InvalidInputError(f"S must be a subset of 1..{self.s}, got {sorted(S)}")
        object.__setattr__(self, "S", S)
        rest = [k for k in range(1, self.s + 1) if k not in S]
        chain = tuple(sorted(S, reverse=True)) + (0,) + tuple(rest)
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "_rank", {k: i for i, k in enumerate(chain)})

    @classmethod
    def trivial(cls) -> "ExcellentOrder":
        return cls(0)

    @property
    def is_trivial(self) -> bool:
        return self.s == 0

    def compare(self, a: int, b: int) -> Comparison:
        """Decides a > b, a = b or a < b in this order."""
        for x in (a, b):
            if not isinstance(x, int) or not 0 <= x <= self.s:
                raise InvalidInputError(f"{x!r} is outside 0..{self.s}")
        if a == b:
            return Comparison.EQUAL
        return Comparison.GREATER if self._rank[a] < self._rank[b] else Comparison.LESS

    def max_element(self) -> int:
        """s+(>), the top of the chain."""
        return max(self.S) if self.S else 0

    def tensor(self, other: "ExcellentOrder") -> "ExcellentOrder":
        return ExcellentOrder(max(self.s, other.s), self.S ^ other.S)

    def __str__(self) -> str:
        return " > ".join(map(str, self.chain))

    def to_json(self) -> dict:
        return {"s": self.s, "S": sorted(self.S, reverse=True)}


def compare(o: ExcellentOrder, a: int, b: int) -> Comparison:
    return o.compare(a, b)


def max_element(o: ExcellentOrder) -> int:
    return o.max_element()


def tensor(o1: ExcellentOrder, o2: ExcellentOrder) -> ExcellentOrder:
    """s = max(s1, s2) and S = S1 symmetric-difference S2."""
    return o1.tensor(o2)


# ==============================================================================
# TUPLES OF ORDERS
# ==============================================================================

@dataclass(frozen=True)
class OrderTuple:
    """
    A finite map from primes to excellent orders.

    Primes without an entry carry the trivial excellent order.
    """
    orders: Tuple[Tuple[int, ExcellentOrder], ...] = ()

    def __post_init__(self):
        items = dict(self.orders)
        if len(items) != len(self.orders):
            raise InvalidInputError("An order tuple lists a prime twice")
        for p in items:
            if not is_prime(p):
                raise InvalidInputError(f"Order tuple keys must be primes, got {p!r}")
        object.__setattr__(self, "orders", tuple(sorted(items.items())))

    @classmethod
    def from_dict(cls, orders: Mapping[int, ExcellentOrder]) -> "OrderTuple":
        return cls(tuple(orders.items()))

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.orders)

    def __getitem__(self, p: int) -> ExcellentOrder:
        for q, o in self.orders:
            if q == p:
                return o
        return ExcellentOrder.trivial()

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __len__(self) -> int:
        return len(self.orders)

    def require(self, primes: Iterable[int]) -> None:
        """Raises MissingPrimeError for the first prime without an order."""
        for p in primes:
            if p not in self:
                raise MissingPrimeError(f"No excellent order is given for the prime {p}", p)

    def to_json(self) -> dict:
        return {str(p): o.to_json() for p, o in self.orders}


def tensor_tuple(t1: OrderTuple, t2: OrderTuple) -> OrderTuple:
    """Prime-wise tensor product; absent primes count as trivial."""
    primes = sorted(set(t1.primes) | set(t2.primes))
    return OrderTuple(tuple((p, t1[p].tensor(t2[p])) for p in primes))


# ==============================================================================
# QUADRANT GRAPHS
# ==============================================================================

@dataclass(frozen=True)
class QuadrantGraph:
    """
    The quadrant V of a tuple with its p-edges and center.

    `graph` is a networkx DiGraph whose edges carry the attribute `prime`.
    """
    graph: nx.DiGraph = field(compare=False)
    center: int

    @cached_property
    def ancestors(self) -> Dict[int, FrozenSet[int]]:
        """For each vertex, the vertices with a path into it."""
        return {m: frozenset(nx.ancestors(self.graph, m)) for m in self.graph}

    @cached_property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.graph.nodes)

    def edges(self, p: Optional[int] = None) -> List[Tuple[int, int]]:
        """All edges, or only the p-edges."""
        return sorted(
            (a, b) for a, b, q in self.graph.edges(data="prime") if p is None or q == p
        )

    def __contains__(self, m: int) -> bool:
        return m in self.graph


@lru_cache(maxsize=1024)
def quadrant(t: OrderTuple) -> QuadrantGraph:
    """The quadrant of t. Results are cached per tuple, so callers must not mutate the graph."""
    graph = nx.DiGraph()
    ranges = [[p**k for k in range(o.s + 1)] for p, o in t.orders]
    graph.add_nodes_from(math.prod(powers) for powers in itertools.product(*ranges))
    for p, o in t.orders:
        bases = [m for m in graph.nodes if m % p]
        for m0 in bases:
            for a, b in itertools.permutations(range(o.s + 1), 2):
                if o.compare(a, b) is Comparison.GREATER:
                    graph.add_edge(m0 * p**a, m0 * p**b, prime=p)
    center = 1
    for p, o in t.orders:
        center *= p ** o.max_element()
    return QuadrantGraph(graph, center)


# ==============================================================================
# COMPATIBILITY
# ==============================================================================

def subset_compatible(K: Iterable[int], o: ExcellentOrder) -> bool:
    """True iff K is a prefix of the descending chain of o (the empty prefix included)."""
    K = set(K)
    if any(not isinstance(k, int) or not 0 <= k <= o.s for k in K):
        return False
    return K == set(o.chain[:len(K)])


def _check_set(M: Iterable[int]) -> FrozenSet[int]:
    M = frozenset(M)
    if not M:
        raise InvalidInputError("M must be nonempty")
    if any(not isinstance(m, int) or m < 1 for m in M):
        raise InvalidInputError(f"M must consist of positive integers, got {sorted(M)}")
    return M


def _inside_quadrant(M: FrozenSet[int], t: OrderTuple, primes: Sequence[int]) -> bool:
    return all(v_p(p, m) <= t[p].s for m in M for p in primes)


def fiber_sets(M: Iterable[int], p: int) -> Dict[int, Set[int]]:
    """The sets K_{M,p,m0} keyed by m0 in pi_p(M)."""
    fibers: Dict[int, Set[int]] = {}
    for m in M:
        fibers.setdefault(pi_p(p, m), set()).add(v_p(p, m))
    return fibers


def _checked_primes(M: FrozenSet[int], t: OrderTuple) -> Tuple[int, ...]:
    """P(M) together with the primes of t; every prime of P(M) must be in t."""
    t.require(primes_of(M))
    return tuple(sorted(set(primes_of(M)) | set(t.primes)))


def set_compatible(M: Iterable[int], t: OrderTuple) -> bool:
    """Every fiber set of M is subset compatible with the order of its prime."""
    M = _check_set(M)
    primes = _checked_primes(M, t)
    if not _inside_quadrant(M, t, primes):
        return False
    return all(
        subset_compatible(K, t[p]) for p in primes for K in fiber_sets(M, p).values()
    )


def set_compatible_via_graph(M: Iterable[int], t: OrderTuple) -> bool:
    """Every predecessor in the quadrant graph of a member of M lies in M."""
    M = _check_set(M)
    _checked_primes(M, t)
    quad = quadrant(t)
    if not M <= quad.vertices:
        return False
    return all(set(quad.graph.predecessors(m)) <= M for m in M)


def set_compatible_via_center(M: Iterable[int], t: OrderTuple) -> bool:
    """M holds the center of the quadrant and every vertex on a path into M."""
    M = _check_set(M)
    _checked_primes(M, t)
    quad = quadrant(t)
    if not M <= quad.vertices or quad.center not in M:
        return False
    return all(quad.ancestors[m] <= M for m in M)


def map_compatible(psi: PsiMap, t: OrderTuple) -> bool:
    """psi(m_a) >= psi(m_b) along every edge (m_a, m_b) of the quadrant."""
    values = psi.multiplicities()
    if not values:
        return True
    t.require(primes_of(values))
    quad = quadrant(t)
    if not set(values) <= quad.vertices:
        return False
    return all(values.get(a, 0) >= values.get(b, 0) for a, b in quad.graph.edges)


# ==============================================================================
# COVERINGS
# ==============================================================================

@dataclass(frozen=True)
class Covering:
    """An ordered tuple (M_1, ..., M_l) of finite nonempty sets."""
    members: Tuple[FrozenSet[int], ...] = ()

    def __post_init__(self):
        members = tuple(frozenset(M) for M in self.members)
        if any(not M for M in members):
            raise InvalidInputError("Covering members must be nonempty")
        object.__setattr__(self, "members", members)

    @property
    def length(self) -> int:
        return len(self.members)

    def to_psi(self) -> PsiMap:
        """psi(m) = |{j : m in M_j}|."""
        counts: Dict[int, int] = {}
        for M in self.members:
            for m in M:
                counts[m] = counts.get(m, 0) + 1
        return PsiMap(counts)

    def to_json(self) -> list:
        return [sorted(M) for M in self.members]


def standard_covering(psi: PsiMap) -> Covering:
    """M_j = {m : psi(m) >= j} for j = 1..l_psi."""
    values = psi.multiplicities()
    return Covering(tuple(
        frozenset(m for m, c in values.items() if c >= j)
        for j in range(1, psi.length + 1)
    ))


def covering_compatible(c: Covering, t: OrderTuple) -> bool:
    return all(set_compatible(M, t) for M in c.members)


# ==============================================================================
# ORDERS OF A WEIGHT SYSTEM
# ==============================================================================

def weight_orders(ws: WeightSystem) -> OrderTuple:
    """
    The tuple attached to a (C2) weight system.

    For each prime p dividing an element of M_w = supp(psi_w): s = max v_p over
    M_w, and k in 1..s belongs to S iff an odd number of the t_j are divisible
    by p^k.
    """
    if not check_c2(ws):
        raise PreconditionError(f"{ws} does not satisfy (C2)")
    support = psi_w(ws).support
    t = st_pairs(ws).t
    orders = {}
    for p in primes_of(support):
        s = max(v_p(p, m) for m in support)
        S = {k for k in range(1, s + 1) if sum(1 for x in t if x % p**k == 0) % 2}
        orders[p] = ExcellentOrder(s, frozenset(S))
    LOGGER.debug(f"Orders of {ws}: {orders}")
    return OrderTuple.from_dict(orders)
