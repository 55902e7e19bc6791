"""Dense univariate polynomials with rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

__all__ = [
    "RationalPolynomial",
    "parse_polynomial",
    "evaluate",
    "poly_gcd",
    "rational_roots",
    "from_linear_factors",
]


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class RationalPolynomial:
    """Coefficients in increasing degree; the zero polynomial is ``()``."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = RationalPolynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RationalPolynomial(quot), RationalPolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            return self
        lead = self.leading
        return RationalPolynomial(c / lead for c in self.coeffs)

    def primitive_integer(self) -> list[int]:
        """Integer coefficients of the same polynomial up to a rational scalar, content 1."""
        if self.is_zero():
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints)
        if ints[-1] < 0:
            g = -g
        return [c // g for c in ints]

    def is_proportional_to(self, other: "RationalPolynomial") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.monic() == other.monic()

    def __str__(self):
        return unparse(self)


def _coerce(p) -> RationalPolynomial:
    if isinstance(p, RationalPolynomial):
        return p
    return RationalPolynomial([p])


def from_linear_factors(factors: Sequence[tuple], scale=1) -> RationalPolynomial:
    """scale * prod(a*n + b) for (a, b) in factors."""
    result = RationalPolynomial([scale])
    for a, b in factors:
        result = result * RationalPolynomial([b, a])
    return result


def evaluate(p: RationalPolynomial, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic gcd over Q by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(q: RationalPolynomial) -> tuple[list[tuple[Fraction, int]], bool]:
    """All rational roots with multiplicity, plus whether q splits completely over Q."""
    if q.degree < 1:
        raise DomainError("rational_roots needs a polynomial of degree >= 1")
    roots: list[tuple[Fraction, int]] = []
    rest = q
    # a zero root is pulled out first; the rational root theorem needs a nonzero constant term
    mult = 0
    while rest.coeffs[0] == 0:
        rest = RationalPolynomial(rest.coeffs[1:])
        mult += 1
    if mult:
        roots.append((Fraction(0), mult))
    if rest.degree >= 1:
        ints = rest.primitive_integer()
        candidates = set()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
        for r in sorted(candidates):
            if rest.degree < 1:
                break
            linear = RationalPolynomial([-r, 1])
            mult = 0
            while rest.degree >= 1:
                quot, rem = divmod(rest, linear)
                if not rem.is_zero():
                    break
                rest = quot
                mult += 1
            if mult:
                roots.append((r, mult))
    roots.sort()
    return roots, rest.degree == 0


# -- text grammar ----------------------------------------------------------
#
#   poly  := [sign] term (sign term)*
#   term  := coeff ['*' mono] | mono
#   mono  := 'n' ['^' int]
#   coeff := int ['/' int]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def offset(self) -> int:
        return len(self.text[: self.i].encode("utf-8"))

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            raise ParseError("expected an integer", self.offset())
        return int(self.text[start : self.i])


def _parse_mono(sc: _Scanner) -> int:
    if not sc.take("n"):
        raise ParseError("expected 'n'", sc.offset())
    if sc.take("^"):
        return sc.integer()
    return 1


def parse_polynomial(text: str) -> RationalPolynomial:
    sc = _Scanner(text)
    if sc.peek() == "":
        raise ParseError("empty polynomial", sc.offset())
    acc: dict[int, Fraction] = {}
    first = True
    while True:
        sign = 1
        if sc.take("-"):
            sign = -1
        elif sc.take("+"):
            pass
        elif not first:
            raise ParseError("expected '+' or '-'", sc.offset())
        first = False
        ch = sc.peek()
        if ch.isdigit():
            num = sc.integer()
            den = 1
            if sc.take("/"):
                at = sc.offset()
                den = sc.integer()
                if den == 0:
                    raise ParseError("zero denominator", at)
            coeff = Fraction(num, den)
            power = _parse_mono(sc) if sc.take("*") else 0
        elif ch == "n":
            coeff = Fraction(1)
            power = _parse_mono(sc)
        else:
            raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input", sc.offset())
        acc[power] = acc.get(power, Fraction(0)) + sign * coeff
        if sc.peek() == "":
            break
    top = max(acc)
    return RationalPolynomial(acc.get(k, 0) for k in range(top + 1))


def unparse(p: RationalPolynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += sign + body
    return out
