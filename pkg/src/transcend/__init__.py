"""Exact rational-or-transcendental classification of sum_{n>=0} P(n)/Q(n)."""

__version__ = "0.1.0"

from .classify import Verdict, classify_sum, degree2_criterion, degree3_check, degree4_check, exhaustive_exception_search
from .errors import InputError
from .okada import PeriodicFunction, okada_verdict
from .poly import RationalPolynomial, parse_polynomial
from .reduce import ReducedSum, reduce_sum

__all__ = [
    "Verdict",
    "classify_sum",
    "degree2_criterion",
    "degree3_check",
    "degree4_check",
    "exhaustive_exception_search",
    "InputError",
    "PeriodicFunction",
    "okada_verdict",
    "RationalPolynomial",
    "parse_polynomial",
    "ReducedSum",
    "reduce_sum",
]
