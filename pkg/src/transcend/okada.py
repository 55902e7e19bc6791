"""Okada's vanishing criterion for sum_{n>=1} f(n)/n with f periodic mod q.

Residue q stands for the class 0 mod q throughout, so ``f(q)`` is the value
on multiples of q.  Every quantity here is an exact ``Fraction``.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Sequence

from .arith import euler_phi, prime_divisors, valuation
from .errors import DomainError
from .linalg import nullspace

__all__ = [
    "PeriodicFunction",
    "OkadaReport",
    "support_sets",
    "full_primes",
    "epsilon",
    "s_set",
    "sigma",
    "coefficient_A",
    "okada_verdict",
    "okada_rows",
    "decomposition_sum",
    "smooth_numbers",
    "dilate",
    "nullspace_search",
]


@dataclass(frozen=True)
class PeriodicFunction:
    q: int
    values: tuple[Fraction, ...]

    def __init__(self, q: int, values: Sequence):
        values = tuple(Fraction(v) for v in values)
        if q <= 1:
            raise DomainError(f"period must exceed 1, got {q}")
        if len(values) != q:
            raise DomainError(f"expected {q} values, got {len(values)}")
        if sum(values) != 0:
            raise DomainError(f"values must sum to 0, got {sum(values)}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "values", values)

    def __call__(self, n: int) -> Fraction:
        return self.values[(n - 1) % self.q]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, v in enumerate(self.values) if v)

    def is_zero(self) -> bool:
        return not any(self.values)


@dataclass(frozen=True)
class OkadaReport:
    q: int
    condition_J: tuple[tuple[int, Fraction], ...]
    condition_P: tuple[tuple[int, Fraction], ...]

    @property
    def vanishes(self) -> bool:
        return all(r == 0 for _, r in self.condition_J) and all(r == 0 for _, r in self.condition_P)


@lru_cache(maxsize=None)
def support_sets(q: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """(J, L, L') for modulus q."""
    if q <= 1:
        raise DomainError(f"q must exceed 1, got {q}")
    J = tuple(a for a in range(1, q + 1) if gcd(a, q) == 1)
    L = tuple(r for r in range(1, q + 1) if 1 < gcd(r, q) < q)
    return J, L, L + (q,)


def full_primes(r: int, q: int) -> tuple[int, ...]:
    """Primes p | q with v_p(r) >= v_p(q)."""
    return tuple(p for p in prime_divisors(q) if valuation(p, r) >= valuation(p, q))


def epsilon(r: int, p: int, q: int) -> Fraction:
    if q % p:
        raise DomainError(f"{p} does not divide {q}")
    if p in full_primes(r, q):
        return valuation(p, q) + Fraction(1, p - 1)
    return Fraction(valuation(p, r))


def s_set(r: int, q: int) -> list[int]:
    """All products of primes in P(r) with each exponent in [0, phi(q))."""
    phi = euler_phi(q)
    out = [1]
    for p in full_primes(r, q):
        out = [m * p**e for m in out for e in range(phi)]
    return sorted(out)


def sigma(r: int, a: int, n: int, q: int) -> int:
    return int((r - a * n * gcd(r, q)) % q == 0)


@lru_cache(maxsize=None)
def _weights_by_residue(r: int, q: int) -> dict[int, Fraction]:
    """n mod q/g  ->  sum of 1/n over n in S(r) with that residue (g = gcd(r, q))."""
    mod = q // gcd(r, q)
    phi = euler_phi(q)
    acc = {1 % mod: Fraction(1)}
    for p in full_primes(r, q):
        nxt: dict[int, Fraction] = {}
        for res, w in acc.items():
            pk, rk = 1, res
            for _ in range(phi):
                nxt[rk] = nxt.get(rk, Fraction(0)) + w / pk
                pk *= p
                rk = rk * p % mod
        acc = nxt
    return acc


def coefficient_A(r: int, a: int, q: int) -> Fraction:
    g = gcd(r, q)
    if gcd(a, q) != 1:
        raise DomainError(f"a = {a} is not coprime to q = {q}")
    mod = q // g
    phi = euler_phi(q)
    # r = a*n*g (mod q)  <=>  a*n = r/g (mod q/g)
    target = (r // g) % mod
    total = sum(
        (w for res, w in _weights_by_residue(r, q).items() if (a * res - target) % mod == 0),
        Fraction(0),
    )
    if not total:
        return Fraction(0)
    geometric = prod(1 / (1 - Fraction(1, p**phi)) for p in full_primes(r, q))
    return total * geometric / g


@lru_cache(maxsize=None)
def okada_rows(q: int) -> tuple[tuple[tuple[str, int], ...], tuple[tuple[Fraction, ...], ...]]:
    """Linear forms for both conditions, as rows over the unknowns f(1..q).

    Labels are ("J", a) for the coprime-residue conditions and ("P", p) for
    the prime conditions.
    """
    J, L, Lp = support_sets(q)
    phi = euler_phi(q)
    labels, rows = [], []
    for a in J:
        row = [Fraction(0)] * q
        row[a - 1] = Fraction(1)
        for r in L:
            row[r - 1] = coefficient_A(r, a, q)
        row[q - 1] = Fraction(1, phi)
        labels.append(("J", a))
        rows.append(tuple(row))
    for p in prime_divisors(q):
        row = [Fraction(0)] * q
        for r in Lp:
            row[r - 1] = epsilon(r, p, q)
        labels.append(("P", p))
        rows.append(tuple(row))
    return tuple(labels), tuple(rows)


def okada_verdict(f: PeriodicFunction) -> OkadaReport:
    labels, rows = okada_rows(f.q)
    cj, cp = [], []
    for (kind, key), row in zip(labels, rows):
        res = sum((c * v for c, v in zip(row, f.values) if c and v), Fraction(0))
        (cj if kind == "J" else cp).append((key, res))
    return OkadaReport(f.q, tuple(cj), tuple(cp))


def smooth_numbers(primes: Sequence[int], bound: int):
    """Yield, in increasing order, every m <= bound whose prime factors all lie in ``primes``."""
    primes = sorted(primes)
    heap = [(1, 0)]
    while heap:
        m, i = heapq.heappop(heap)
        yield m
        # push m*p only for p at or beyond m's largest prime, so each m appears once
        for j in range(i, len(primes)):
            nxt = m * primes[j]
            if nxt <= bound:
                heapq.heappush(heap, (nxt, j))


def decomposition_sum(f: PeriodicFunction, a: int, bound: int) -> tuple[Fraction, Fraction]:
    """Truncated sum of f(a*m)/m over q-smooth m <= bound, and a bound on the omitted tail."""
    if gcd(a, f.q) != 1:
        raise DomainError(f"a = {a} is not coprime to q = {f.q}")
    if bound < 1:
        raise DomainError("bound must be positive")
    primes = prime_divisors(f.q)
    value = Fraction(0)
    harmonic = Fraction(0)
    for m in smooth_numbers(primes, bound):
        harmonic += Fraction(1, m)
        v = f(a * m)
        if v:
            value += v / m
    full = prod(Fraction(p, p - 1) for p in primes)
    fmax = max(abs(v) for v in f.values)
    return value, fmax * (full - harmonic)


def dilate(f: PeriodicFunction, k: int) -> PeriodicFunction:
    if gcd(k, f.q) != 1:
        raise DomainError(f"k = {k} is not coprime to q = {f.q}")
    return PeriodicFunction(f.q, [f(k * n) for n in range(1, f.q + 1)])


def nullspace_search(q: int, residues: Sequence[int]) -> list[tuple[int, ...]]:
    """Basis of the f supported on ``residues`` that satisfy both conditions and sum to 0.

    Entries are listed in the order of ``residues``.
    """
    residues = list(residues)
    if len(set(residues)) != len(residues) or any(not 0 < s <= q for s in residues):
        raise DomainError(f"residues {residues} must be distinct and in (0, {q}]")
    if gcd(q, *residues) != 1:
        raise DomainError(f"gcd of residues {residues} and {q} exceeds 1")
    _, rows = okada_rows(q)
    system = [[row[s - 1] for s in residues] for row in rows]
    system.append([1] * len(residues))
    return nullspace(system, len(residues))
