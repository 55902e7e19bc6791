"""Command-line front end.

Exit codes: 0 rational value, 3 transcendental, 1 input error,
2 numeric cross-check failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .arith import euler_phi, prime_divisors
from .classify import exhaustive_exception_search, classify_sum, RATIONAL
from .errors import InputError
from .numeric import NumericResult, sum_value, total_truncated, total_value, truncated_sum
from .okada import PeriodicFunction, coefficient_A, epsilon, okada_verdict, support_sets
from .poly import RationalPolynomial, from_linear_factors, parse_polynomial
from .reduce import reduce_sum, to_periodic
from .report import build_report, frac_str, okada_dict

EXIT_RATIONAL = 0
EXIT_INPUT = 1
EXIT_CROSSCHECK = 2
EXIT_TRANSCENDENTAL = 3

CROSSCHECK_N = 10**6

_NUM = r"\s*(-?\d+(?:\s*/\s*\d+)?)\s*"
_FACTOR = re.compile(r"\(" + _NUM + "," + _NUM + r"\)")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.replace(" ", ""))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}") from exc


def parse_denominator(text: str) -> RationalPolynomial:
    """Polynomial text, or a factor list "(a,b)(c,d)..." meaning (a*n+b)(c*n+d)..."""
    stripped = text.strip()
    if not stripped.startswith("("):
        return parse_polynomial(text)
    factors, pos = [], 0
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _FACTOR.match(stripped, pos)
        if not m:
            raise InputError(f"bad factor list near offset {pos}: {stripped[pos:]!r}")
        a, b = _fraction(m.group(1)), _fraction(m.group(2))
        if a == 0:
            raise InputError("factor with zero slope")
        factors.append((a, b))
        pos = m.end()
    return from_linear_factors(factors)


def _fmt(x: float) -> str:
    s = f"{x:.11f}"
    return "0.00000000000" if float(s) == 0 else s


def _crosscheck(f: PeriodicFunction, rational: bool) -> tuple[bool, str]:
    closed = sum_value(f)
    trunc = truncated_sum(f, CROSSCHECK_N)
    if not closed.agrees_with(trunc):
        return False, f"channels disagree: digamma {closed.value!r} vs truncation {trunc.value!r}"
    if rational and abs(closed.value) > closed.error_bound:
        return False, f"exact S = 0 but numeric S = {closed.value!r}"
    if not rational and abs(closed.value) <= closed.error_bound:
        return False, f"exact S != 0 but numeric S = {closed.value!r} is within rounding"
    return True, "numeric channels agree with the exact verdict"


def cmd_classify(args) -> int:
    num = parse_polynomial(args.numerator)
    den = parse_denominator(args.denominator)
    verdict = classify_sum(num, den)
    numeric = None
    ok = True
    if args.precision_check:
        numeric = total_value(num, den)
        if not verdict.reduced.is_degenerate:
            ok, msg = _crosscheck(to_periodic(verdict.reduced), verdict.is_rational)
            verdict.notes.append(msg)
    report = build_report(args.numerator, args.denominator, verdict, numeric)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        rs = verdict.reduced
        print(f"T = sum_{{n>=0}} ({args.numerator}) / ({args.denominator})")
        print(f"reduced: q = {rs.q}, offset = {rs.offset}")
        for s, c in rs.terms:
            print(f"  f({s}) = {c}")
        if verdict.certificate is not None:
            print(f"okada: vanishes = {verdict.certificate.vanishes}")
        print(f"verdict: {verdict.kind}" + (f" {verdict.value}" if verdict.value is not None else ""))
        for note in verdict.notes:
            print(f"  - {note}")
        if numeric is not None:
            print(f"numeric: {_fmt(numeric.value)} +/- {numeric.error_bound:.1e}")
    if not ok:
        return EXIT_CROSSCHECK
    return EXIT_RATIONAL if verdict.kind == RATIONAL else EXIT_TRANSCENDENTAL


def cmd_evaluate(args) -> int:
    num = parse_polynomial(args.numerator)
    den = parse_denominator(args.denominator)
    res = total_truncated(num, den, args.truncate) if args.truncate else total_value(num, den)
    if args.json:
        print(json.dumps({"value": res.value, "error_bound": res.error_bound}))
    else:
        print(f"value = {_fmt(res.value)}")
        print(f"error_bound = {res.error_bound:.3e}")
    return 0


def cmd_search(args) -> int:
    if args.qmax < 4:
        hits = []
    else:
        hits = exhaustive_exception_search(args.qmax, workers=args.workers)
    if args.json:
        print(json.dumps([{"q": q, "residues": list(r), "vector": list(v)} for q, r, v in hits]))
    else:
        for q, residues, vec in hits:
            print(f"q={q} {{{','.join(map(str, residues))}}} ({','.join(map(str, vec))})")
    return 0


def cmd_report(args) -> int:
    values = [_fraction(v) for v in args.values.split(",")]
    if len(values) != args.q:
        raise InputError(f"expected {args.q} values, got {len(values)}")
    if sum(values) != 0:
        raise InputError(f"values must sum to 0, got {sum(values)}")
    f = PeriodicFunction(args.q, values)
    rep = okada_verdict(f)
    J, L, Lp = support_sets(f.q)
    primes = prime_divisors(f.q)
    eps = {r: {p: epsilon(r, p, f.q) for p in primes} for r in Lp}
    A = {r: {a: coefficient_A(r, a, f.q) for a in J} for r in L}
    if args.json:
        out = {
            "q": f.q,
            "values": [frac_str(v) for v in f.values],
            "epsilon": [[r, p, frac_str(eps[r][p])] for r in Lp for p in primes],
            "A": [[r, a, frac_str(A[r][a])] for r in L for a in J],
            "okada": okada_dict(rep),
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"q = {f.q}, phi(q) = {euler_phi(f.q)}")
        print(f"J = {list(J)}  L = {list(L)}  L' = {list(Lp)}")
        print("epsilon(r, p):")
        for r in Lp:
            print(f"  r={r}: " + "  ".join(f"p={p}: {eps[r][p]}" for p in primes))
        if L:
            print("A(r, a):")
            for r in L:
                print(f"  r={r}: " + "  ".join(f"a={a}: {A[r][a]}" for a in J))
        print("residuals:")
        for a, res in rep.condition_J:
            print(f"  coprime a={a}: {res}")
        for p, res in rep.condition_P:
            print(f"  prime p={p}: {res}")
        print(f"vanishes = {rep.vanishes}")
    return EXIT_RATIONAL if rep.vanishes else EXIT_TRANSCENDENTAL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="transcend", description="Classify sum P(n)/Q(n) as rational or transcendental.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("--numerator", required=True, help='e.g. "16*n^2+12*n-1"')
        p.add_argument("--denominator", required=True, help='polynomial text or "(4,1)(4,2)..."')
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="exact verdict with certificate")
    add_input(p)
    p.add_argument("--precision-check", action="store_true", help="corroborate with both numeric channels")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="numeric value of the sum")
    add_input(p)
    p.add_argument("--truncate", type=int, default=None, metavar="N", help="use truncation at N instead of digamma")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("search", help="degree-4 vanishing patterns up to a modulus")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("report", help="full Okada report for a periodic function")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--values", required=True, help='comma-separated rationals, e.g. "1,-3,1,1"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
