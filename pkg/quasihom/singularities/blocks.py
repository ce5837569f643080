# quasihom/singularities/blocks.py

"""
The divisor graph (M, E(M)) of a finite set of positive integers and the
conditions (S_p), (T_p), (I) and (II) on it.

An edge runs from m_1 to m_2 when m_1 / m_2 is a power p^k (k >= 1) of a prime
p; it is then a p-edge. Orlik blocks appear here only through M, their rank and
their characteristic polynomial prod Phi_m.
"""

# Standard library imports
import logging
import math
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple

# Third-party imports
import networkx as nx

# Local application imports
from .arith import euler_phi, lcm_all, prime_power_base, primes_of, v_p
from .cyclo import IntPolynomial, PsiMap, char_poly
from .exceptions import InvalidInputError, PreconditionError
from .orders import Covering, OrderTuple, set_compatible, standard_covering
from .weights import WeightSystem, check_c2, psi_w

LOGGER = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class MGraph:
    """
    The directed graph (M, E(M)); edges carry their prime in the attribute `prime`.
    """
    M: FrozenSet[int]
    graph: nx.DiGraph = field(compare=False, repr=False)

    def edges(self, p: Optional[int] = None) -> List[Edge]:
        return sorted(
            (a, b) for a, b, q in self.graph.edges(data="prime") if p is None or q == p
        )

    @property
    def primes(self) -> Tuple[int, ...]:
        return primes_of(self.M)

    def components(self) -> List[FrozenSet[int]]:
        """Undirected components, ordered by their smallest element."""
        return sorted((frozenset(c) for c in nx.weakly_connected_components(self.graph)), key=min)

    @property
    def is_connected(self) -> bool:
        return nx.is_weakly_connected(self.graph)

    def subgraph(self, nodes: Iterable[int]) -> "MGraph":
        nodes = frozenset(nodes)
        return MGraph(nodes, self.graph.subgraph(nodes).copy())


def build_graph(M: Iterable[int]) -> MGraph:
    M = frozenset(M)
    if not M:
        raise InvalidInputError("M must be nonempty")
    if any(not isinstance(m, int) or m < 1 for m in M):
        raise InvalidInputError(f"M must consist of positive integers, got {sorted(M)}")
    graph = nx.DiGraph()
    graph.add_nodes_from(M)
    for m1 in M:
        for m2 in M:
            if m1 > m2 and m1 % m2 == 0:
                p = prime_power_base(m1 // m2)
                if p is not None:
                    graph.add_edge(m1, m2, prime=p)
    return MGraph(M, graph)


# ==============================================================================
# p-PLANES AND THE CONDITIONS (T_p), (S_p)
# ==============================================================================

def _without(g: MGraph, edges: Iterable[Edge]) -> nx.Graph:
    undirected = g.graph.to_undirected(as_view=False)
    undirected.remove_edges_from(edges)
    return undirected


def p_planes(g: MGraph, p: int) -> List[FrozenSet[int]]:
    """The components of (M, E(M) - E_p(M))."""
    rest = _without(g, g.edges(p))
    return sorted((frozenset(c) for c in nx.connected_components(rest)), key=min)


def _p_targets(g: MGraph, p: int) -> FrozenSet[int]:
    return frozenset(b for _, b in g.edges(p))


def highest_p_planes(g: MGraph, p: int) -> List[FrozenSet[int]]:
    """The p-planes that no p-edge ends in."""
    targets = _p_targets(g, p)
    return [plane for plane in p_planes(g, p) if not plane & targets]


def highest_p_edges(g: MGraph, p: int) -> List[Edge]:
    """The p-edges whose source no p-edge ends at."""
    targets = _p_targets(g, p)
    return [(a, b) for a, b in g.edges(p) if a not in targets]


def check_Tp(g: MGraph, p: int) -> bool:
    return len(highest_p_planes(g, p)) == 1


def check_Sp(g: MGraph, p: int) -> bool:
    return nx.number_connected_components(_without(g, highest_p_edges(g, p))) <= 2


# ==============================================================================
# CONDITIONS (I) AND (II)
# ==============================================================================

def _odd_primes(g: MGraph) -> List[int]:
    return [p for p in g.primes if p != 2]


def failing_condition(g: MGraph) -> Optional[str]:
    """
    The first of (S_2), (T_p) for odd p dividing an element of M that fails,
    as "S_2" or "T_p:<p>"; None if all hold. Connectivity is reported apart.
    """
    if not check_Sp(g, 2):
        return "S_2"
    for p in _odd_primes(g):
        if not check_Tp(g, p):
            return f"T_p:{p}"
    return None


def check_condition_I(g: MGraph) -> bool:
    """Connected, (S_2), and (T_p) for every odd prime p."""
    return g.is_connected and failing_condition(g) is None


def _satisfies_all_odd_Tp(g: MGraph) -> bool:
    return all(check_Tp(g, p) for p in _odd_primes(g))


def check_condition_II(g: MGraph) -> bool:
    """
    Two components, both 2-planes satisfying every odd (T_p), labeled so that
    gcd(lcm M_1, lcm M_2) is 1 or 2 and v_2(lcm M_2) > v_2(lcm M_1) in {0, 1}.
    """
    components = g.components()
    if len(components) != 2 or g.edges(2):
        return False
    if not all(_satisfies_all_odd_Tp(g.subgraph(c)) for c in components):
        return False
    lcms = [lcm_all(c) for c in components]
    if math.gcd(*lcms) not in (1, 2):
        return False
    for first, second in (lcms, lcms[::-1]):
        low, high = v_p(2, first), v_p(2, second)
        if low in (0, 1) and high > low:
            return True
    return False


def verdict(M: Iterable[int]) -> dict:
    """The JSON verdict object of a set M."""
    g = build_graph(M)
    return {
        "M": sorted(g.M),
        "connected": g.is_connected,
        "failing_condition": failing_condition(g),
        "condition_I": check_condition_I(g),
        "condition_II": check_condition_II(g),
    }


# ==============================================================================
# ORLIK BLOCKS
# ==============================================================================

@dataclass(frozen=True)
class OrlikBlockSpec:
    """The rank and characteristic polynomial of the Orlik block of M."""
    M: FrozenSet[int]
    rank: int
    charpoly: IntPolynomial = field(compare=False)

    def to_json(self) -> dict:
        return {"M": sorted(self.M), "rank": self.rank, "charpoly": str(self.charpoly)}


def orlik_block(M: Iterable[int]) -> OrlikBlockSpec:
    M = frozenset(M)
    if not M:
        raise InvalidInputError("M must be nonempty")
    return OrlikBlockSpec(
        M,
        sum(euler_phi(m) for m in M),
        char_poly(PsiMap({m: 1 for m in M})),
    )


def covering_blocks(c: Covering) -> List[OrlikBlockSpec]:
    return [orlik_block(M) for M in c.members]


def covering_char_poly(c: Covering) -> IntPolynomial:
    """The product of the block polynomials of a covering."""
    poly = IntPolynomial.one()
    for block in covering_blocks(c):
        poly = poly * block.charpoly
    return poly


# ==============================================================================
# THEOREM-LEVEL CHECKS
# ==============================================================================

def verify_theorem_1_4a(ws: WeightSystem) -> bool:
    """Every member of the standard covering of psi_w satisfies condition (I)."""
    if not check_c2(ws):
        raise PreconditionError(f"{ws} does not satisfy (C2)")
    covering = standard_covering(psi_w(ws))
    for M in covering.members:
        if not check_condition_I(build_graph(M)):
            LOGGER.warning(f"Covering member {sorted(M)} of {ws} violates condition (I)")
            return False
    return True


def verify_lemma_2_7(M: Iterable[int], t: OrderTuple) -> bool:
    """A set compatible with t is connected, satisfies every (S_p) and condition (I)."""
    M = frozenset(M)
    if not set_compatible(M, t):
        raise PreconditionError(f"{sorted(M)} is not compatible with {t.to_json()}")
    g = build_graph(M)
    primes = sorted(set(g.primes) | {2})
    return g.is_connected and all(check_Sp(g, p) for p in primes) and check_condition_I(g)
