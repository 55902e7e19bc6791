"""Deterministic JSON-ready reports; exact values as canonical "p/q" strings."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .classify import Verdict
from .numeric import NumericResult
from .okada import OkadaReport
from .reduce import ReducedSum


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def reduced_dict(rs: ReducedSum) -> dict:
    return {
        "q": rs.q,
        "offset": frac_str(rs.offset),
        "terms": [[s, frac_str(c)] for s, c in rs.terms],
    }


def okada_dict(rep: Optional[OkadaReport]) -> Optional[dict]:
    if rep is None:
        return None
    return {
        "q": rep.q,
        "condition_J": [[a, frac_str(r)] for a, r in rep.condition_J],
        "condition_P": [[p, frac_str(r)] for p, r in rep.condition_P],
        "vanishes": rep.vanishes,
    }


def verdict_dict(v: Verdict) -> dict:
    return {
        "kind": v.kind,
        "value": None if v.value is None else frac_str(v.value),
        "notes": list(v.notes),
        "exceptional": v.exceptional,
    }


def numeric_dict(n: Optional[NumericResult]) -> Optional[dict]:
    if n is None:
        return None
    return {"value": n.value, "error_bound": n.error_bound}


def build_report(numerator_text: str, denominator_text: str, verdict: Verdict,
                 numeric: Optional[NumericResult] = None) -> dict:
    return {
        "input": {"numerator": numerator_text, "denominator": denominator_text},
        "reduced": reduced_dict(verdict.reduced),
        "okada": okada_dict(verdict.certificate),
        "verdict": verdict_dict(verdict),
        "numeric": numeric_dict(numeric),
    }
