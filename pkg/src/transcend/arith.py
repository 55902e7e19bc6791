"""Integer helpers: valuations, Euler phi, trial-division factorization."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DomainError

__all__ = [
    "NatFactorization",
    "valuation",
    "euler_phi",
    "factorize",
    "prime_divisors",
    "coprime_count_in_progression",
]


@dataclass(frozen=True)
class NatFactorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"non-canonical factorization {self.factors!r}")
            prod *= p**e
            last = p
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def valuation(p: int, n: int) -> int:
    """Largest e with p**e dividing n."""
    if n == 0:
        raise DomainError("valuation of 0 is undefined")
    if p < 2:
        raise DomainError(f"valuation base must be prime, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


# wheel increments for 2*3*5 = 30, starting from 7
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@lru_cache(maxsize=4096)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, i = 7, 0
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += _WHEEL[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> NatFactorization:
    if n < 1:
        raise DomainError(f"factorize expects n >= 1, got {n}")
    return NatFactorization(n, _factor_tuple(n))


def prime_divisors(n: int) -> tuple[int, ...]:
    return factorize(n).primes


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"euler_phi expects n >= 1, got {n}")
    result = n
    for p, _ in _factor_tuple(n):
        result = result // p * (p - 1)
    return result


def coprime_count_in_progression(n: int, d: int, r: int) -> int:
    """Count elements of {r + t*d : t = 1..n/d} coprime to n.

    The count is taken directly and checked against phi(n)/phi(d).
    """
    if n <= 1 or d <= 0 or n % d != 0 or gcd(r, d) != 1:
        raise DomainError(f"need n > 1, d > 0, d | n, gcd(r, d) = 1; got n={n}, d={d}, r={r}")
    count = sum(1 for t in range(1, n // d + 1) if gcd(r + t * d, n) == 1)
    closed, rem = divmod(euler_phi(n), euler_phi(d))
    assert rem == 0 and closed == count, (n, d, r, count)
    return count
