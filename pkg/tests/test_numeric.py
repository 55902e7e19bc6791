import math
from fractions import Fraction as F

import numpy as np
import pytest

from transcend.numeric import (
    EULER_GAMMA,
    digamma_rational,
    sum_value,
    total_truncated,
    total_value,
    truncated_sum,
)
from transcend.okada import PeriodicFunction
from transcend.poly import RationalPolynomial as P, from_linear_factors

from conftest import CORPUS, Q4_DEN, Q4_F, Q4_NUM, Q6_DEN, Q6_F, Q6_NUM

LN2 = math.log(2)


def digamma_series(x, N=10**6):
    """psi(x) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+x)), tail ~ (x-1)/N."""
    n = np.arange(N, dtype=np.float64)
    head = math.fsum(1 / (n + 1) - 1 / (n + x))
    return -EULER_GAMMA + head + (x - 1) / (N + x / 2)


@pytest.mark.parametrize(
    "a, q, expected",
    [
        (1, 2, -EULER_GAMMA - 2 * LN2),
        (1, 1, -EULER_GAMMA),
        (1, 4, -EULER_GAMMA - 3 * LN2 - math.pi / 2),
    ],
)
def test_digamma_classical_values(a, q, expected):
    assert digamma_rational(a, q) == pytest.approx(expected, rel=1e-13, abs=1e-13)
    assert abs(digamma_series(a / q) - expected) < 1e-9


@pytest.mark.parametrize("a, q", [(1, 3), (2, 3), (3, 4), (5, 12), (7, 9), (1, 30), (29, 30), (4, 6)])
def test_digamma_matches_series(a, q):
    assert abs(digamma_rational(a, q) - digamma_series(a / q)) < 1e-9


def test_digamma_domain():
    with pytest.raises(ValueError):
        digamma_rational(0, 3)
    with pytest.raises(ValueError):
        digamma_rational(4, 3)


def test_sum_value_examples():
    r = sum_value(PeriodicFunction(2, [1, -1]))
    assert abs(r.value - LN2) < 1e-12
    for f in (Q4_F, Q6_F, PeriodicFunction(4, [1, -3, 1, 1])):
        r = sum_value(f)
        assert abs(r.value) <= r.error_bound


def test_sum_value_bound_is_small(corpus):
    for f in corpus:
        r = sum_value(f)
        assert 0 <= r.error_bound <= 1e-10 * float(sum(abs(v) for v in f.values))


def test_truncated_sum_examples():
    r = truncated_sum(PeriodicFunction(2, [1, -1]), 10**6)
    assert r.error_bound <= 2e-6
    assert abs(r.value - LN2) <= r.error_bound
    assert f"{r.value:.8f}".startswith("0.693146")
    r = truncated_sum(PeriodicFunction(4, [1, -3, 1, 1]), 10**6)
    assert abs(r.value) < 4e-6
    with pytest.raises(ValueError):
        truncated_sum(Q4_F, 3)


def test_channel_agreement_corpus(corpus):
    for f in corpus:
        for N in (10**6, 10**6 + 1, 12345 * f.q):
            assert sum_value(f).agrees_with(truncated_sum(f, N))


@pytest.mark.parametrize(
    "num, den, expected",
    [
        (P([1]), from_linear_factors([(1, 1), (2, 1), (4, 1)]), math.pi / 3),
        (Q4_NUM, Q4_DEN, 0.0),
        (Q6_NUM, Q6_DEN, 0.0),
        (P([1]), from_linear_factors([(2, 1), (2, 2), (2, 3)]), LN2 - 0.5),
        (P([1]), from_linear_factors([(1, 1), (1, 2)]), 1.0),
    ],
)
def test_total_value(num, den, expected):
    r = total_value(num, den)
    assert abs(r.value - expected) < 1e-9
    t = total_truncated(num, den, 10**6)
    assert abs(t.value - r.value) <= t.error_bound + r.error_bound


def test_total_value_matches_direct_partial_sums():
    num = P([F(1, 3), 2])
    den = from_linear_factors([(3, 1), (3, 2), (2, 5)])
    n = np.arange(0, 400_000, dtype=np.float64)
    terms = (2 * n + 1 / 3) / ((3 * n + 1) * (3 * n + 2) * (2 * n + 5))
    s1, s2 = math.fsum(terms[:200_000]), math.fsum(terms)
    assert abs(total_value(num, den).value - (2 * s2 - s1)) < 1e-9


def test_truncation_bound_never_exceeds_crude_bound(corpus):
    for f in corpus:
        N = 10 * f.q + 3
        crude = f.q * float(max(abs(v) for v in f.values)) / N
        assert truncated_sum(f, N).error_bound <= crude + 1e-12
