"""Decide whether T = sum_{n>=0} P(n)/Q(n) is an explicit rational or transcendental.

After reduction T = A + S with A rational and S = sum f(n)/n.  If S != 0
it is transcendental (hence so is T); Okada's criterion decides S = 0
exactly.  The degree-specific checks below restate known closed-form
criteria and must never disagree with ``classify_sum``.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import InputError
from .linalg import normalize_vector
from .okada import OkadaReport, PeriodicFunction, dilate, nullspace_search, okada_verdict, support_sets
from .poly import RationalPolynomial, from_linear_factors, poly_gcd
from .reduce import ReducedSum, reduce_sum, to_periodic

__all__ = [
    "RATIONAL",
    "TRANSCENDENTAL",
    "Verdict",
    "EXCEPTIONAL_PATTERNS",
    "classify_sum",
    "degree2_criterion",
    "degree3_check",
    "degree4_check",
    "match_exceptional",
    "exhaustive_exception_search",
]

RATIONAL = "RationalValue"
TRANSCENDENTAL = "Transcendental"


@dataclass
class Verdict:
    kind: str
    value: Optional[Fraction]
    certificate: Optional[OkadaReport]
    reduced: ReducedSum
    notes: list[str] = field(default_factory=list)
    exceptional: Optional[str] = None

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL


# The two vanishing degree-4 sums: (q, residues, numerator, f on residues up to scale).
EXCEPTIONAL_PATTERNS = {
    "q4": (4, (1, 2, 3, 4), RationalPolynomial([-1, 12, 16]), (1, -3, 1, 1)),
    "q6": (6, (1, 2, 4, 5), RationalPolynomial([-1, 36, 36]), (1, -3, 3, -1)),
}


def classify_sum(numerator: RationalPolynomial, denominator: RationalPolynomial) -> Verdict:
    rs = reduce_sum(numerator, denominator)
    notes = [f"reduced to offset {rs.offset} plus a periodic sum mod {rs.q}"]
    if rs.is_degenerate:
        notes.append("periodic part cancels completely; T equals the offset")
        return Verdict(RATIONAL, rs.offset, None, rs, notes)
    report = okada_verdict(to_periodic(rs))
    if report.vanishes:
        notes.append("Okada criterion: S = 0, so T equals the offset")
        return Verdict(RATIONAL, rs.offset, report, rs, notes)
    notes.append("Okada criterion: S != 0; a nonzero S is transcendental, hence so is T")
    return Verdict(TRANSCENDENTAL, None, report, rs, notes)


def _check_no_pole(q: int, residues: Sequence[int]) -> None:
    for s in residues:
        if s <= 0 and s % q == 0:
            raise InputError(f"factor {q}n{s:+d} vanishes at n = {-s // q}")


def degree2_criterion(q: int, s1: int, s2: int) -> bool:
    """True iff sum alpha/((qn+s1)(qn+s2)) is transcendental."""
    if s1 == s2:
        raise InputError("s1 and s2 must be distinct")
    _check_no_pole(q, (s1, s2))
    return (s1 - s2) % q != 0


def _proportional(u: Sequence, v: Sequence) -> bool:
    if len(u) != len(v):
        return False
    pairs = [(Fraction(a), Fraction(b)) for a, b in zip(u, v)]
    if any((a == 0) != (b == 0) for a, b in pairs):
        return False
    ratios = {a / b for a, b in pairs if b}
    return len(ratios) == 1


def match_exceptional(f: PeriodicFunction) -> Optional[str]:
    """Name of the exceptional pattern f is a scaled dilation of, if any."""
    for name, (q, residues, _, pattern) in EXCEPTIONAL_PATTERNS.items():
        if f.q != q:
            continue
        target = [Fraction(0)] * q
        for s, c in zip(residues, pattern):
            target[s - 1] = Fraction(c)
        J, _, _ = support_sets(q)
        if any(_proportional(dilate(f, k).values, target) for k in J):
            return name
    return None


def degree3_check(q: int, residues: Sequence[int], numerator: RationalPolynomial) -> Verdict:
    """Degree-3 criterion: transcendental when its hypotheses hold, else defer to Okada."""
    s = list(residues)
    if len(s) != 3 or len(set(s)) != 3:
        raise InputError("need three distinct integers")
    if numerator.is_zero() or numerator.degree > 1:
        raise InputError("numerator must be nonzero of degree <= 1")
    _check_no_pole(q, s)
    beta, alpha = (list(numerator.coeffs) + [Fraction(0)])[:2]
    verdict = classify_sum(numerator, from_linear_factors([(q, x) for x in s]))
    same_class = len({x % q for x in s}) == 1
    excluded = False
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        if alpha * s[k] == beta * q and (s[i] - s[j]) % q == 0:
            excluded = True
    if same_class or excluded:
        verdict.notes.append("degree-3 criterion hypotheses fail; verdict from Okada criterion")
        return verdict
    if verdict.is_rational:
        raise AssertionError(f"degree-3 criterion contradicts Okada on q={q}, s={s}")
    verdict.notes.append("degree-3 criterion: residues not all congruent and exclusions hold, so T is transcendental")
    return verdict


def degree4_check(q: int, residues: Sequence[int], numerator: RationalPolynomial) -> Verdict:
    """Degree-4 classification: transcendental unless one of the two exceptional identities."""
    s = list(residues)
    if len(s) != 4 or len(set(s)) != 4 or any(not 0 < x <= q for x in s):
        raise InputError(f"need four distinct residues in (0, {q}]")
    if gcd(q, *s) != 1:
        raise InputError("gcd of residues and q must be 1")
    if numerator.is_zero() or numerator.degree > 2:
        raise InputError("numerator must be nonzero of degree <= 2")
    den = from_linear_factors([(q, x) for x in s])
    if poly_gcd(numerator, den).degree > 0:
        raise InputError("numerator shares a factor with the denominator")
    verdict = classify_sum(numerator, den)
    if verdict.reduced.is_degenerate:
        return verdict
    name = match_exceptional(to_periodic(verdict.reduced))
    if verdict.is_rational != (name is not None):
        raise AssertionError(f"degree-4 classification contradicts Okada on q={q}, s={s}")
    if name:
        verdict.exceptional = name
        verdict.notes.append(f"degree-4 exceptional identity {name}: T = {verdict.value}")
    else:
        verdict.notes.append("degree-4 criterion: not an exceptional identity, so T is transcendental")
    return verdict


def _search_one(args):
    q, residues = args
    basis = nullspace_search(q, residues)
    if not basis:
        return None
    if len(basis) == 1:
        v = basis[0]
    else:
        # some combination avoids every coordinate hyperplane unless a coordinate vanishes identically
        if any(all(b[i] == 0 for b in basis) for i in range(len(residues))):
            return None
        v = next(
            w
            for t in itertools.count(2)
            for w in [tuple(sum(t**j * b[i] for j, b in enumerate(basis)) for i in range(len(residues)))]
            if all(w)
        )
        v = normalize_vector(v)
    if not all(v):
        return None
    return q, tuple(residues), v


def exhaustive_exception_search(q_max: int, size: int = 4, workers: int = 1):
    """Every normalized residue set of the given size mod q <= q_max carrying a vanishing f
    with all support values nonzero.  Results sorted by (q, residues)."""
    tasks = [
        (q, combo)
        for q in range(2, q_max + 1)
        for combo in itertools.combinations(range(1, q + 1), size)
        if gcd(q, *combo) == 1
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_one, tasks, chunksize=32))
    else:
        results = [_search_one(t) for t in tasks]
    return sorted(r for r in results if r is not None)
