"""Floating-point corroboration of the exact verdicts.

Two independent channels evaluate S = sum f(n)/n: a closed form through
digamma values at rationals, and direct truncation with a tail bound.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .okada import PeriodicFunction
from .poly import RationalPolynomial
from .reduce import reduce_sum, to_periodic

__all__ = [
    "NumericResult",
    "EULER_GAMMA",
    "digamma_rational",
    "sum_value",
    "truncated_sum",
    "total_value",
    "total_truncated",
]

EULER_GAMMA = 0.57721566490153286060651209008240243
ROUNDING = 1e-12


@dataclass(frozen=True)
class NumericResult:
    value: float
    error_bound: float

    def agrees_with(self, other: "NumericResult") -> bool:
        return abs(self.value - other.value) <= self.error_bound + other.error_bound


def digamma_rational(a: int, q: int) -> float:
    """psi(a/q) for 0 < a <= q by Gauss's finite formula."""
    if not 0 < a <= q:
        raise ValueError(f"need 0 < a <= q, got a={a}, q={q}")
    g = math.gcd(a, q)
    a, q = a // g, q // g
    if a == q:
        return -EULER_GAMMA
    total = -EULER_GAMMA - math.log(2 * q) - 0.5 * math.pi / math.tan(math.pi * a / q)
    acc = math.fsum(
        math.cos(2 * math.pi * k * a / q) * math.log(math.sin(math.pi * k / q))
        for k in range(1, (q - 1) // 2 + 1)
    )
    return total + 2 * acc


def sum_value(f: PeriodicFunction) -> NumericResult:
    # valid because the values sum to zero: the -gamma terms cancel
    q = f.q
    terms = [float(v) * digamma_rational(a, q) for a, v in enumerate(f.values, start=1) if v]
    value = -math.fsum(terms) / q
    weight = math.fsum(abs(float(v)) for v in f.values)
    return NumericResult(value, ROUNDING * max(weight, 1e-300))


def truncated_sum(f: PeriodicFunction, N: int) -> NumericResult:
    """sum_{n=1}^{N} f(n)/n with an Abel-summation tail bound.

    Any run of consecutive values sums to a difference of two prefix sums,
    so the tail is at most (max prefix - min prefix) / (N + 1), which never
    exceeds q*max|f|/N.
    """
    q = f.q
    if N < q:
        raise ValueError(f"N = {N} must be at least q = {q}")
    vals = np.array([float(v) for v in f.values])
    n = np.arange(1, N + 1, dtype=np.float64)
    value = float(np.sum(vals[(np.arange(N) % q)] / n))
    prefix = list(itertools.accumulate(f.values, initial=0))
    spread = float(max(prefix) - min(prefix))
    return NumericResult(value, spread / (N + 1) + ROUNDING)


def total_value(numerator: RationalPolynomial, denominator: RationalPolynomial) -> NumericResult:
    rs = reduce_sum(numerator, denominator)
    if rs.is_degenerate:
        return NumericResult(float(rs.offset), ROUNDING)
    s = sum_value(to_periodic(rs))
    return NumericResult(float(rs.offset) + s.value, s.error_bound + ROUNDING)


def total_truncated(numerator: RationalPolynomial, denominator: RationalPolynomial, N: int) -> NumericResult:
    rs = reduce_sum(numerator, denominator)
    if rs.is_degenerate:
        return NumericResult(float(rs.offset), ROUNDING)
    f = to_periodic(rs)
    s = truncated_sum(f, max(N, f.q))
    return NumericResult(float(rs.offset) + s.value, s.error_bound + ROUNDING)
