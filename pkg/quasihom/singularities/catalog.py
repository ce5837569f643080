# quasihom/singularities/catalog.py

"""
Named weight systems and Thom-Sebastiani sums of them.

The simple singularities A_k, D_k, E_6, E_7, E_8 and three chain type systems
K_1, K_2, K_3 are enough to write every 5-variable counter-example to the
strong Saito conjecture with d <= 200 as a Thom-Sebastiani sum.
"""

# Standard library imports
import re
from fractions import Fraction
from functools import reduce as fold
from typing import Dict, List, Tuple

# Local application imports
from .exceptions import InvalidInputError
from .weights import WeightSystem, concat

_NAME_PATTERN = re.compile(r"^([ADEK])(\d+)$")

# Normalized weights of the exceptional and chain type systems.
FIXED_SYSTEMS: Dict[str, Tuple[Fraction, ...]] = {
    "E6": (Fraction(1, 3), Fraction(1, 4)),
    "E7": (Fraction(1, 3), Fraction(2, 9)),
    "E8": (Fraction(1, 3), Fraction(1, 5)),
    "K1": (Fraction(1, 4), Fraction(3, 20), Fraction(17, 40)),
    "K2": (Fraction(1, 4), Fraction(3, 28), Fraction(25, 56)),
    "K3": (Fraction(1, 6), Fraction(5, 18), Fraction(13, 36)),
}

# Summands of the ten counter-examples, in census order.
SAITO_DECOMPOSITIONS: Tuple[Tuple[str, ...], ...] = (
    ("D13", "K1"),
    ("D13", "D21", "A3"),
    ("D13", "K2"),
    ("D13", "D29", "A3"),
    ("D11", "K3"),
    ("D11", "D19", "A5"),
    ("D11", "D19", "A2"),
    ("D31", "K3"),
    ("D19", "D31", "A5"),
    ("D19", "D31", "A2"),
)


def a_k(k: int) -> WeightSystem:
    """x^(k+1), Milnor number k."""
    if k < 1:
        raise InvalidInputError(f"A_k needs k >= 1, got {k}")
    return WeightSystem((1,), k + 1)


def d_k(k: int) -> WeightSystem:
    """x^(k-1) + x*y^2, Milnor number k."""
    if k < 4:
        raise InvalidInputError(f"D_k needs k >= 4, got {k}")
    return WeightSystem.from_normalized((Fraction(1, k - 1), Fraction(k - 2, 2 * (k - 1))))


def named(name: str) -> WeightSystem:
    """Looks up "A3", "D13", "E7", "K2" and the like."""
    if name in FIXED_SYSTEMS:
        return WeightSystem.from_normalized(FIXED_SYSTEMS[name])
    match = _NAME_PATTERN.match(name)
    if not match or match.group(1) in "EK":
        raise InvalidInputError(f"Unknown weight system name {name!r}")
    family, k = match.group(1), int(match.group(2))
    return a_k(k) if family == "A" else d_k(k)


def thom_sebastiani(*systems: WeightSystem) -> WeightSystem:
    """The weight system of the sum of the given singularities in separate variables."""
    if not systems:
        raise InvalidInputError("A Thom-Sebastiani sum needs at least one summand")
    return fold(concat, systems)


def sorted_descending(ws: WeightSystem) -> WeightSystem:
    return WeightSystem(tuple(sorted(ws.v, reverse=True)), ws.d)


def saito_counterexamples() -> List[WeightSystem]:
    """The ten census rows rebuilt from their summands, weights descending."""
    return [
        sorted_descending(thom_sebastiani(*(named(name) for name in names)))
        for names in SAITO_DECOMPOSITIONS
    ]
