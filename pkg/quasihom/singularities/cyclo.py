# quasihom/singularities/cyclo.py

"""
Exact arithmetic with divisors of polynomials whose zeros are unit roots.

An element of the group ring Q[mu(C)] that is invariant under Galois
conjugation is a rational combination of the divisors

    Lambda_n = div(t^n - 1)      and      Psi_m = div(Phi_m).

`CycloElement` stores the Lambda-coordinates chi(n) because the product rule is
a monomial rule there (Lambda_m * Lambda_n = gcd(m, n) * Lambda_lcm(m, n)).
`PsiMap` is the Psi-coordinate view psi(m); when psi is a multiplicity map it
describes the characteristic polynomial prod Phi_m^psi(m), which `char_poly`
expands into an `IntPolynomial`.
"""

# Standard library imports
import logging
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

# Local application imports
from .arith import divisors, euler_phi, lcm_all, moebius
from .exceptions import ContractViolation, InvalidInputError

LOGGER = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


# ==============================================================================
# FINITE-SUPPORT MAPS
# ==============================================================================

class _FiniteSupportMap:
    """
    An immutable map from positive integers to rationals with finite support.

    Zero coefficients are never stored, so two maps are equal exactly when their
    canonical item tuples are equal.
    """
    __slots__ = ("_items",)

    BASIS = ""

    def __init__(self, coeffs: Union[Mapping[int, Scalar], Iterable[Tuple[int, Scalar]]] = ()):
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[int, Fraction] = {}
        for key, value in pairs:
            if not isinstance(key, int) or isinstance(key, bool) or key < 1:
                raise InvalidInputError(f"Index must be a positive integer, got {key!r}")
            if not isinstance(value, Rational):
                raise InvalidInputError(f"Coefficient must be rational, got {value!r}")
            acc[key] = acc.get(key, Fraction(0)) + Fraction(value)
        self._items = tuple(sorted((k, v) for k, v in acc.items() if v != 0))

    def __getitem__(self, key: int) -> Fraction:
        for k, v in self._items:
            if k == key:
                return v
        return Fraction(0)

    def get(self, key: int) -> Fraction:
        return self[key]

    def items(self) -> Tuple[Tuple[int, Fraction], ...]:
        return self._items

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self._items)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self._items)

    def __iter__(self) -> Iterator[int]:
        return iter(self.support)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._items))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self._items)
        return f"{type(self).__name__}({{{body}}})"

    def to_json(self) -> dict:
        """The CLI serialization {"basis": ..., "coeffs": [[n, num, den], ...]}."""
        return {
            "basis": self.BASIS,
            "coeffs": [[k, v.numerator, v.denominator] for k, v in self._items],
        }


class CycloElement(_FiniteSupportMap):
    """A Q-combination sum chi(n) * Lambda_n, stored in Lambda-coordinates."""
    __slots__ = ()

    BASIS = "lambda"

    @property
    def chi(self) -> Dict[int, Fraction]:
        return self.as_dict()

    def __add__(self, other: "CycloElement") -> "CycloElement":
        if not isinstance(other, CycloElement):
            return NotImplemented
        return CycloElement(self._items + other._items)

    def __neg__(self) -> "CycloElement":
        return CycloElement((k, -v) for k, v in self._items)

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "CycloElement":
        if isinstance(other, Rational):
            return CycloElement((k, v * other) for k, v in self._items)
        if not isinstance(other, CycloElement):
            return NotImplemented
        acc: Dict[int, Fraction] = {}
        for m, a in self._items:
            for n, b in other._items:
                g = math.gcd(m, n)
                key = m // g * n
                acc[key] = acc.get(key, 0) + g * a * b
        return CycloElement(acc)

    __rmul__ = __mul__


class PsiMap(_FiniteSupportMap):
    """A Q-combination sum psi(m) * Psi_m, stored in Psi-coordinates."""
    __slots__ = ()

    BASIS = "psi"

    @property
    def psi(self) -> Dict[int, Fraction]:
        return self.as_dict()

    @property
    def is_multiplicity_map(self) -> bool:
        """True when every value is a nonnegative integer."""
        return all(v.denominator == 1 and v > 0 for _, v in self._items)

    def multiplicities(self) -> Dict[int, int]:
        """The values as integers; rejects maps that are not multiplicity maps."""
        if not self.is_multiplicity_map:
            raise InvalidInputError(f"{self!r} is not a nonnegative integer map")
        return {k: int(v) for k, v in self._items}

    @property
    def length(self) -> int:
        """l_psi, the maximal multiplicity (0 for the empty map)."""
        return int(max((v for _, v in self._items), default=0))

    @property
    def rank(self) -> Fraction:
        """sum psi(m) * phi(m), the degree of the described polynomial."""
        return sum((v * euler_phi(k) for k, v in self._items), Fraction(0))


def element_from_json(payload: dict) -> Union[CycloElement, PsiMap]:
    """Inverse of `to_json` for both bases."""
    try:
        basis = payload["basis"]
        coeffs = [(int(n), Fraction(int(num), int(den))) for n, num, den in payload["coeffs"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"Malformed divisor payload: {e}") from e
    if basis == CycloElement.BASIS:
        return CycloElement(coeffs)
    if basis == PsiMap.BASIS:
        return PsiMap(coeffs)
    raise InvalidInputError(f"Unknown basis {basis!r}")


# ==============================================================================
# BASIS ELEMENTS AND LINEAR STRUCTURE
# ==============================================================================

def lambda_element(n: int) -> CycloElement:
    """Lambda_n = div(t^n - 1)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    return CycloElement({n: 1})


ONE = CycloElement({1: 1})
ZERO = CycloElement()


@lru_cache(maxsize=4096)
def psi_element(m: int) -> CycloElement:
    """Psi_m = sum over n | m of mu(m/n) * Lambda_n."""
    return CycloElement({n: moebius(m // n) for n in divisors(m)})


def add(a: CycloElement, b: CycloElement) -> CycloElement:
    return a + b


def scale(a: CycloElement, q: Scalar) -> CycloElement:
    return a * Fraction(q)


def mul(a: CycloElement, b: CycloElement) -> CycloElement:
    return a * b


# ==============================================================================
# TRACE, DEGREE, LEFSCHETZ NUMBERS
# ==============================================================================

def trace(a: CycloElement) -> Fraction:
    """tr Lambda_1 = 1 and tr Lambda_n = 0 for n >= 2, so the trace is chi(1)."""
    return a[1]


def degree(a: CycloElement) -> Fraction:
    """The number of unit roots counted with coefficients: sum n * chi(n)."""
    return sum((n * c for n, c in a.items()), Fraction(0))


def lefschetz(a: CycloElement, k: int) -> Fraction:
    """L_k = sum over n | k of n * chi(n); every n divides k = 0."""
    if not isinstance(k, int) or k < 0:
        raise InvalidInputError(f"k must be a nonnegative integer, got {k!r}")
    return sum((n * c for n, c in a.items() if k % n == 0), Fraction(0))


def period(a: CycloElement) -> int:
    """d_chi, the lcm of the support; L_k only depends on gcd(k, d_chi)."""
    return lcm_all(a.support)


def from_lefschetz(values: Mapping[int, Scalar], D: int) -> CycloElement:
    """
    Recovers the element supported on divisors of D from its Lefschetz numbers.

    Uses n * chi(n) = sum over k | n of L_k * mu(n/k). Values for k outside the
    divisors of D are not needed, but if present they must agree with the
    reconstructed element.
    """
    if not isinstance(D, int) or D < 1:
        raise InvalidInputError(f"D must be a positive integer, got {D!r}")
    divs = divisors(D)
    missing = [k for k in divs if k not in values]
    if missing:
        raise InvalidInputError(f"Lefschetz numbers missing for k in {missing}")
    chi = {}
    for n in divs:
        total = sum(Fraction(values[k]) * moebius(n // k) for k in divisors(n))
        chi[n] = total / n
    result = CycloElement(chi)
    for k, expected in values.items():
        if lefschetz(result, k) != Fraction(expected):
            raise ContractViolation(
                f"Inconsistent Lefschetz data: L_{k} = {expected} given, "
                f"{lefschetz(result, k)} reconstructed"
            )
    return result


# ==============================================================================
# BASIS CHANGE
# ==============================================================================

def to_psi(a: CycloElement) -> PsiMap:
    """psi(m) = sum over multiples n of m of chi(n)."""
    acc: Dict[int, Fraction] = {}
    for n, c in a.items():
        for m in divisors(n):
            acc[m] = acc.get(m, 0) + c
    return PsiMap(acc)


def from_psi(p: PsiMap) -> CycloElement:
    acc: Dict[int, Fraction] = {}
    for m, c in p.items():
        for n, mu in psi_element(m).items():
            acc[n] = acc.get(n, 0) + c * mu
    return CycloElement(acc)


def tensor_psi(p1: PsiMap, p2: PsiMap) -> PsiMap:
    """
    The multiplicity map of the tensor product of two polynomials.

    div(f tensor g) = div(f) * div(g), so the product is taken in the group ring.
    """
    for p in (p1, p2):
        if not p.is_multiplicity_map:
            raise InvalidInputError(f"Tensor product needs multiplicity maps, got {p!r}")
    return to_psi(from_psi(p1) * from_psi(p2))


# ==============================================================================
# INTEGER POLYNOMIALS
# ==============================================================================

class IntPolynomial:
    """
    A dense integer polynomial in t, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def binomial(cls, n: int) -> "IntPolynomial":
        """t^n - 1."""
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def times_binomial(self, n: int) -> "IntPolynomial":
        """Multiplies by t^n - 1 in O(degree) steps."""
        f = list(self.coeffs)
        out = [0] * n + f
        for i, c in enumerate(f):
            out[i] -= c
        return IntPolynomial(out)

    def divide_binomial(self, n: int) -> "IntPolynomial":
        """Exact division by t^n - 1; a nonzero remainder is a contract violation."""
        f = self.coeffs
        if not f:
            return IntPolynomial()
        top = len(f) - 1 - n
        if top < 0:
            raise ContractViolation(f"t^{n} - 1 does not divide a polynomial of degree {len(f) - 1}")
        q = [0] * (top + 1)
        # f[j + n] = q[j] - q[j + n]
        for j in range(top, -1, -1):
            q[j] = f[j + n] + (q[j + n] if j + n <= top else 0)
        for i in range(n):
            expected = -q[i] if i <= top else 0
            if f[i] != expected:
                raise ContractViolation(f"t^{n} - 1 does not divide {self}")
        return IntPolynomial(q)

    def divmod_monic(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic polynomial."""
        if not divisor.coeffs or divisor.coeffs[-1] != 1:
            raise InvalidInputError("Divisor must be monic")
        rem = list(self.coeffs)
        k = divisor.degree
        if len(rem) - 1 < k:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - k)
        for i in range(len(rem) - 1, k - 1, -1):
            c = rem[i]
            if c:
                quot[i - k] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - k + j] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem[:k])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _expand_lambda(chi: CycloElement) -> IntPolynomial:
    """prod (t^n - 1)^chi(n) for integral chi, multiplying before dividing."""
    poly = IntPolynomial.one()
    for n, c in chi.items():
        for _ in range(int(c) if c > 0 else 0):
            poly = poly.times_binomial(n)
    for n, c in chi.items():
        for _ in range(int(-c) if c < 0 else 0):
            poly = poly.divide_binomial(n)
    return poly


@lru_cache(maxsize=1024)
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """Phi_m = prod over n | m of (t^n - 1)^mu(m/n)."""
    return _expand_lambda(psi_element(m))


def char_poly(p: PsiMap) -> IntPolynomial:
    """
    Expands prod Phi_m^psi(m).

    The Lambda-coordinates of a multiplicity map are integers, so the product is
    rewritten as prod (t^n - 1)^chi(n) and expanded with O(degree) binomial
    multiplications and exact divisions.
    """
    if not p.is_multiplicity_map:
        raise InvalidInputError(f"Characteristic polynomial needs a multiplicity map, got {p!r}")
    poly = _expand_lambda(from_psi(p))
    if poly.degree != p.rank:
        raise ContractViolation(f"Expanded degree {poly.degree} differs from rank {p.rank}")
    return poly


def cyclotomic_factorization(f: IntPolynomial) -> PsiMap:
    """
    Writes a monic product of cyclotomic polynomials as its multiplicity map.

    Raises InvalidInputError if f has a zero that is not a unit root.
    """
    if not f.coeffs or f.coeffs[-1] != 1:
        raise InvalidInputError(f"{f} is not monic")
    rest = f
    found: Dict[int, int] = {}
    # phi(m) >= sqrt(m / 2), so only m <= 2 * deg^2 can occur.
    limit = max(2, 2 * f.degree * f.degree)
    m = 1
    while rest.degree > 0 and m <= limit:
        if euler_phi(m) <= rest.degree:
            phi_m = cyclotomic_polynomial(m)
            while True:
                quot, rem = rest.divmod_monic(phi_m)
                if rem.coeffs:
                    break
                rest = quot
                found[m] = found.get(m, 0) + 1
        m += 1
    if rest != IntPolynomial.one():
        raise InvalidInputError(f"{f} is not a product of cyclotomic polynomials")
    return PsiMap(found)


def tensor_char_poly(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """The tensor product prod (t - kappa_i * lambda_j) of two cyclotomic products."""
    return char_poly(tensor_psi(cyclotomic_factorization(f), cyclotomic_factorization(g)))


def format_product(p: PsiMap) -> str:
    """Human-readable prod Phi_m^psi(m)."""
    if not p:
        return "1"
    parts = []
    for m, c in p.items():
        parts.append(f"Phi_{m}" if c == 1 else f"Phi_{m}^{c}")
    return " * ".join(parts)
