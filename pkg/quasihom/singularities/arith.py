# quasihom/singularities/arith.py

"""
Elementary number theory shared by every other module.

Everything here is exact integer arithmetic on small positive integers: prime
factorization by trial division against a cached prime table, the Moebius and
Euler functions, p-adic valuations and divisor lists. Inputs are bounded by the
64-bit range; larger values are rejected rather than silently handled.
"""

# Standard library imports
import logging
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, List, Optional, Tuple

# Local application imports
from .conf import get_setting
from .exceptions import InvalidInputError, ResourceLimitError

LOGGER = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1


# ==============================================================================
# PRIME TABLE
# ==============================================================================

@lru_cache(maxsize=4)
def prime_table(bound: int) -> Tuple[int, ...]:
    """
    Returns all primes <= bound, computed once per bound with a sieve.

    The result is an immutable tuple, so the cached table is read-only.
    """
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, bound + 1, p)))
    LOGGER.debug(f"Prime table built up to {bound}")
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _primes() -> Tuple[int, ...]:
    return prime_table(get_setting("PRIME_TABLE_BOUND"))


def check_int64(value: int, what: str = "value") -> int:
    """Rejects integers outside the signed 64-bit range."""
    if abs(value) > INT64_MAX:
        raise ResourceLimitError(f"{what} = {value} exceeds the 64-bit range")
    return value


def _require_positive(m: int, what: str = "m") -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvalidInputError(f"{what} must be a positive integer, got {m!r}")
    check_int64(m, what)


# ==============================================================================
# FACTORIZATION
# ==============================================================================

@dataclass(frozen=True)
class PrimeFactorization:
    """
    The factorization of a positive integer.

    Attributes:
        pairs: (p, e) pairs with p prime and e >= 1, sorted by p.
    """
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def exponent(self, p: int) -> int:
        for q, e in self.pairs:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        """Reconstructs the factored integer."""
        return math.prod(p**e for p, e in self.pairs)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.pairs)


@lru_cache(maxsize=8192)
def factorize(m: int) -> PrimeFactorization:
    """
    Factors m by trial division.

    Primes from the cached table are tried first; if a cofactor survives the
    table, trial division continues with odd candidates beyond it.
    """
    _require_positive(m)
    pairs: List[Tuple[int, int]] = []
    rest = m
    for p in _primes():
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            pairs.append((p, e))
    else:
        # The table ran out before sqrt(rest); continue past its last prime.
        table = _primes()
        q = (table[-1] + 1) if table else 2
        while q * q <= rest:
            if rest % q == 0:
                e = 0
                while rest % q == 0:
                    rest //= q
                    e += 1
                pairs.append((q, e))
            q += 1
    if rest > 1:
        pairs.append((rest, 1))
    return PrimeFactorization(tuple(pairs))


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    return factorize(p).pairs == ((p, 1),)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidInputError(f"p must be prime, got {p!r}")


def prime_divisors(m: int) -> Tuple[int, ...]:
    """The primes dividing m, ascending."""
    return factorize(m).primes


def primes_of(numbers: Iterable[int]) -> Tuple[int, ...]:
    """The set P(M) of primes dividing some element of `numbers`, ascending."""
    found = set()
    for m in numbers:
        found.update(prime_divisors(m))
    return tuple(sorted(found))


# ==============================================================================
# ARITHMETIC FUNCTIONS
# ==============================================================================

def moebius(m: int) -> int:
    """The Moebius function: (-1)^r for a product of r distinct primes, else 0."""
    fact = factorize(m)
    if not fact.is_squarefree:
        return 0
    return -1 if len(fact.pairs) % 2 else 1


def euler_phi(m: int) -> int:
    """Euler's totient, the degree of the m-th cyclotomic polynomial."""
    result = m
    for p, _ in factorize(m).pairs:
        result -= result // p
    return result


def v_p(p: int, m: int) -> int:
    """The exact p-adic valuation of m."""
    _require_prime(p)
    _require_positive(m)
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def pi_p(p: int, m: int) -> int:
    """The p-free part m / p^{v_p(m)}."""
    return m // p ** v_p(p, m)


@lru_cache(maxsize=8192)
def _divisors(m: int) -> Tuple[int, ...]:
    divs = [1]
    for p, e in factorize(m).pairs:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(m: int) -> List[int]:
    """All positive divisors of m, ascending."""
    _require_positive(m)
    return list(_divisors(m))


def prime_power_base(r: int) -> Optional[int]:
    """Returns p if r = p^k for a prime p and k >= 1, else None."""
    if not isinstance(r, int) or r < 2:
        return None
    pairs = factorize(r).pairs
    return pairs[0][0] if len(pairs) == 1 else None


def gcd_all(numbers: Iterable[int]) -> int:
    return reduce(math.gcd, numbers, 0)


def lcm_all(numbers: Iterable[int]) -> int:
    return reduce(math.lcm, numbers, 1)
