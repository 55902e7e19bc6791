"""Rewrite sum_{n>=0} P(n)/Q(n) as A + sum_{n>=1} f(n)/n with f periodic.

Pipeline: to_linear_factors -> partial_fractions -> shift_to_fundamental
-> divide_common_gcd -> to_periodic.  Only finitely many leading terms are
ever moved around, so every step is an exact identity of convergent series
once the coefficients sum to zero.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm, prod

from .errors import (
    DivergentSum,
    InconsistentInput,
    NotRationalZeros,
    NotSimpleZeros,
    PoleAtIndex,
)
from .okada import PeriodicFunction
from .poly import RationalPolynomial, evaluate, poly_gcd, rational_roots

__all__ = [
    "LinearFactorForm",
    "ReducedSum",
    "to_linear_factors",
    "partial_fractions",
    "shift_to_fundamental",
    "divide_common_gcd",
    "to_periodic",
    "reduce_sum",
]


@dataclass(frozen=True)
class LinearFactorForm:
    """denominator == scale * prod(q*x + s for s in factors)."""

    q: int
    scale: Fraction
    factors: tuple[int, ...]
    numerator: RationalPolynomial

    def denominator(self) -> RationalPolynomial:
        out = RationalPolynomial([self.scale])
        for s in self.factors:
            out = out * RationalPolynomial([s, self.q])
        return out


@dataclass(frozen=True)
class ReducedSum:
    """T = offset + sum_{n>=0} sum_i coeff_i / (q*n + residue_i)."""

    q: int
    terms: tuple[tuple[int, Fraction], ...]
    offset: Fraction

    def __post_init__(self):
        residues = [s for s, _ in self.terms]
        if len(set(residues)) != len(residues):
            raise ValueError(f"repeated residue in {residues}")
        if any(not 0 < s <= self.q for s in residues):
            raise ValueError(f"residues {residues} not in (0, {self.q}]")
        if sum(c for _, c in self.terms) != 0:
            raise ValueError("coefficients do not sum to zero")

    @property
    def is_degenerate(self) -> bool:
        return not self.terms


def to_linear_factors(numerator: RationalPolynomial, denominator: RationalPolynomial) -> LinearFactorForm:
    if denominator.is_zero():
        raise NotRationalZeros("denominator is the zero polynomial")
    if not numerator.is_zero():
        g = poly_gcd(numerator, denominator)
        if g.degree > 0:
            numerator = numerator // g
            denominator = denominator // g
    if denominator.degree < 1:
        raise DivergentSum("denominator is constant after cancellation")
    if numerator.degree > denominator.degree - 2:
        raise DivergentSum(
            f"deg P = {numerator.degree} > deg Q - 2 = {denominator.degree - 2}; the series diverges"
        )
    roots, split = rational_roots(denominator)
    if not split:
        raise NotRationalZeros("denominator has irrational or complex zeros")
    for root, mult in roots:
        if mult > 1:
            raise NotSimpleZeros(f"root {root} has multiplicity {mult}")
    for root, _ in roots:
        if root.denominator == 1 and root >= 0:
            raise PoleAtIndex(int(root))
    q = lcm(*(r.denominator for r, _ in roots))
    factors = tuple(int(-r * q) for r, _ in roots)
    scale = denominator.leading / Fraction(q) ** len(factors)
    return LinearFactorForm(q, scale, factors, numerator)


def partial_fractions(lf: LinearFactorForm) -> list[tuple[int, Fraction]]:
    """Coefficients A_i with P/Q = sum A_i / (q*x + s_i)."""
    out = []
    for i, s in enumerate(lf.factors):
        denom = lf.scale * prod(t - s for j, t in enumerate(lf.factors) if j != i)
        a = evaluate(lf.numerator, Fraction(-s, lf.q)) / denom
        if a == 0:
            raise InconsistentInput(f"partial-fraction coefficient at s = {s} vanished")
        out.append((s, a))
    total = sum(a for _, a in out)
    if total != 0:
        raise DivergentSum("partial-fraction coefficients do not sum to zero")
    return out


def shift_to_fundamental(lf: LinearFactorForm, pf) -> ReducedSum:
    """Move every s_i into (0, q]; the finitely many skipped or added terms go into the offset."""
    q = lf.q
    if sum(a for _, a in pf) != 0:
        raise DivergentSum("coefficients must sum to zero")
    merged: dict[int, Fraction] = defaultdict(Fraction)
    offset = Fraction(0)
    for s, a in pf:
        base = (s - 1) % q + 1
        k = (s - base) // q
        if k > 0:
            offset -= a * sum(Fraction(1, q * t + base) for t in range(k))
        elif k < 0:
            offset += a * sum(Fraction(1, q * t + base) for t in range(k, 0))
        merged[base] += a
    terms = tuple(sorted((s, c) for s, c in merged.items() if c != 0))
    return ReducedSum(q, terms, offset)


def divide_common_gcd(rs: ReducedSum) -> ReducedSum:
    if rs.is_degenerate:
        return rs
    d = reduce(gcd, (s for s, _ in rs.terms), rs.q)
    if d == 1:
        return rs
    # distinct residues with zero-sum nonzero coefficients force at least two terms, so q/d > 1
    return ReducedSum(rs.q // d, tuple((s // d, c / d) for s, c in rs.terms), rs.offset)


def to_periodic(rs: ReducedSum) -> PeriodicFunction:
    q = max(rs.q, 2)
    values = [Fraction(0)] * q
    for s, c in rs.terms:
        values[s - 1] = c
    return PeriodicFunction(q, values)


def reduce_sum(numerator: RationalPolynomial, denominator: RationalPolynomial) -> ReducedSum:
    """Full reduction: linear factors, partial fractions, shift, gcd normalization."""
    lf = to_linear_factors(numerator, denominator)
    return divide_common_gcd(shift_to_fundamental(lf, partial_fractions(lf)))
