# quasihom/singularities/reports.py

"""
Reports as JSON-ready dicts and as plain text: the analysis of a weight system,
the graph and block data of a set M, and the quadrant of an order tuple.
"""

# Standard library imports
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Union

# Local application imports
from .blocks import (build_graph, check_Sp, check_Tp, highest_p_planes, orlik_block, p_planes,
                     verdict, verify_lemma_2_7)
from .conf import get_setting
from .cyclo import PsiMap, format_product
from .exceptions import ResourceLimitError
from .orders import (OrderTuple, map_compatible, quadrant, set_compatible, set_compatible_via_center,
                     set_compatible_via_graph, standard_covering, tensor_tuple, weight_orders)
from .weights import (WeightSystem, a_tuple, check_c2, check_c2bar, has_multiplicity_three,
                      milnor_number, normalize, psi_w, reduce, rho, rho_obstruction, saito_strong,
                      saito_weak, st_pairs)

LOGGER = logging.getLogger(__name__)


def check_limits(ws: WeightSystem) -> None:
    max_n = get_setting("ANALYZE_MAX_VARIABLES")
    max_d = get_setting("ANALYZE_MAX_DEGREE")
    if ws.n > max_n:
        raise ResourceLimitError(f"{ws.n} variables exceed the limit of {max_n}")
    if ws.d > max_d:
        raise ResourceLimitError(f"Degree {ws.d} exceeds the limit of {max_d}")


def exact_number(q: Fraction) -> Union[int, str]:
    """Integers stay integers; other rationals become "num/den"."""
    q = Fraction(q)
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _psi_pairs(psi: PsiMap) -> List[list]:
    return [[m, exact_number(c)] for m, c in psi.items()]


def analyze(ws: WeightSystem) -> Dict[str, Any]:
    """
    Collects everything the library knows about `ws`.

    Covering, orders and block verdicts need (C2); exponents need an integral
    rho; the Saito flags are given for (C2-bar) systems.
    """
    check_limits(ws)
    c2bar = check_c2bar(ws)
    c2 = check_c2(ws)
    psi = psi_w(ws)
    report: Dict[str, Any] = {
        "weights": list(ws.v),
        "d": ws.d,
        "reduced": reduce(ws).to_json(),
        "normalized": [exact_number(w) for w in normalize(ws)],
        "multiplicity_three": has_multiplicity_three(ws),
        "c2bar": c2bar,
        "c2": c2,
        "d_w": st_pairs(ws).d_w,
        "milnor": exact_number(milnor_number(ws)),
        "psi": _psi_pairs(psi),
    }
    witness = rho_obstruction(ws)
    report["rho_witness"] = witness
    report["exponents"] = rho(ws).to_json() if witness is None else None
    if ws.n == 4:
        report["a_tuple"] = a_tuple(ws)
    if c2:
        report["saito_strong"] = saito_strong(ws)
        report["saito_weak"] = saito_weak(ws)
        covering = standard_covering(psi)
        orders = weight_orders(ws)
        report["covering"] = covering.to_json()
        report["blocks"] = [
            {**verdict(M), "rank": orlik_block(M).rank} for M in covering.members
        ]
        report["orders"] = orders.to_json()
        report["orders_compatible"] = map_compatible(psi, orders)
    LOGGER.debug(f"Analyzed {ws}: c2bar={c2bar} c2={c2}")
    return report


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def format_text(report: Dict[str, Any]) -> str:
    """A plain-text rendering in Phi_m^k notation."""
    ws = WeightSystem(tuple(report["weights"]), report["d"])
    lines = [
        f"weight system   {ws}",
        f"reduced         ({','.join(map(str, report['reduced']['weights']))};{report['reduced']['d']})",
        f"(C2-bar)        {_yes(report['c2bar'])}",
        f"(C2)            {_yes(report['c2'])}",
        f"d_w             {report['d_w']}",
        f"Milnor number   {report['milnor']}",
    ]
    if report["c2bar"]:
        psi = PsiMap({m: Fraction(c) for m, c in report["psi"]})
        lines.append(f"char. poly      {format_product(psi)}")
    else:
        lines.append(f"psi_w           {', '.join(f'{m}:{c}' for m, c in report['psi'])}")
    if report["exponents"] is not None:
        parts = []
        for num, den, mult in report["exponents"]:
            parts.append(f"{num}/{den}" if mult == 1 else f"{num}/{den} (x{mult})")
        lines.append(f"exponents       {', '.join(parts)}")
    else:
        lines.append(f"rho             not a polynomial (Phi_{report['rho_witness']} remains)")
    if "a_tuple" in report:
        lines.append(f"a-tuple         {report['a_tuple']}")
    if "saito_strong" in report:
        lines.append(f"Saito strong    {_yes(report['saito_strong'])}")
        lines.append(f"Saito weak      {_yes(report['saito_weak'])}")
    if "covering" in report:
        for j, block in enumerate(report["blocks"], start=1):
            lines.append(
                f"M_{j:<13} {block['M']} rank {block['rank']}, condition (I) {_yes(block['condition_I'])}"
            )
        orders = ", ".join(f"p={p}: s={o['s']} S={o['S']}" for p, o in report["orders"].items())
        lines.append(f"orders          {orders or 'none'}")
        lines.append(f"compatible      {_yes(report['orders_compatible'])}")
    return "\n".join(lines)


# ==============================================================================
# BLOCKS AND ORDERS
# ==============================================================================

def _sets(sets: Iterable[frozenset]) -> List[List[int]]:
    return sorted(sorted(s) for s in sets)


def blocks_report(M: Iterable[int]) -> Dict[str, Any]:
    """The graph (M, E(M)) of one set, its p-planes and its Orlik block."""
    g = build_graph(M)
    block = orlik_block(g.M)
    primes = sorted(set(g.primes) | {2})
    return {
        **verdict(g.M),
        "rank": block.rank,
        "charpoly": str(block.charpoly),
        "edges": [[a, b, p] for a, b, p in sorted(g.graph.edges(data="prime"))],
        "components": _sets(g.components()),
        "primes": {
            str(p): {
                "planes": _sets(p_planes(g, p)),
                "highest_planes": _sets(highest_p_planes(g, p)),
                "S_p": check_Sp(g, p),
                "T_p": check_Tp(g, p),
            }
            for p in primes
        },
    }


def format_blocks_text(report: Dict[str, Any]) -> str:
    lines = [
        f"M               {report['M']}",
        f"rank            {report['rank']}",
        f"char. poly      {report['charpoly']}",
        f"connected       {_yes(report['connected'])}",
        f"components      {report['components']}",
        f"condition (I)   {_yes(report['condition_I'])}",
        f"condition (II)  {_yes(report['condition_II'])}",
    ]
    if report["failing_condition"]:
        lines.append(f"fails           {report['failing_condition']}")
    for p, data in report["primes"].items():
        lines.append(
            f"p={p:<13} S_p {_yes(data['S_p'])}, T_p {_yes(data['T_p'])}, "
            f"highest planes {data['highest_planes']}"
        )
    return "\n".join(lines)


def orders_report(t: OrderTuple, M: Optional[Iterable[int]] = None,
                  other: Optional[OrderTuple] = None) -> Dict[str, Any]:
    """
    The chains, quadrant and center of an order tuple.

    With `M`, the three compatibility criteria are evaluated side by side (and
    the graph properties of compatible sets checked); with `other`, the tensor
    product of both tuples is reported as well.
    """
    q = quadrant(t)
    report: Dict[str, Any] = {
        "orders": t.to_json(),
        "chains": {str(p): str(o) for p, o in t.orders},
        "center": q.center,
        "vertices": sorted(q.vertices),
        "edges": len(q.edges()),
    }
    if M is not None:
        M = sorted(set(M))
        compatible = set_compatible(M, t)
        report["set"] = {
            "M": M,
            "compatible": compatible,
            "via_graph": set_compatible_via_graph(M, t),
            "via_center": set_compatible_via_center(M, t),
            "graph_properties": verify_lemma_2_7(M, t) if compatible else None,
        }
    if other is not None:
        report["tensor"] = tensor_tuple(t, other).to_json()
    return report


def format_orders_text(report: Dict[str, Any]) -> str:
    lines = [f"p={p:<13} {chain}" for p, chain in report["chains"].items()]
    lines += [
        f"center          {report['center']}",
        f"quadrant        {len(report['vertices'])} vertices, {report['edges']} edges",
    ]
    if "set" in report:
        s = report["set"]
        lines.append(
            f"M = {s['M']}  compatible {_yes(s['compatible'])} "
            f"(graph {_yes(s['via_graph'])}, center {_yes(s['via_center'])})"
        )
        if s["graph_properties"] is not None:
            lines.append(f"connected with (S_p) and (I)  {_yes(s['graph_properties'])}")
    if "tensor" in report:
        tensor = ", ".join(f"p={p}: s={o['s']} S={o['S']}" for p, o in report["tensor"].items())
        lines.append(f"tensor          {tensor or 'trivial'}")
    return "\n".join(lines)
