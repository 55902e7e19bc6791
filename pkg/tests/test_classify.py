from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from transcend.classify import (
    RATIONAL,
    TRANSCENDENTAL,
    classify_sum,
    degree2_criterion,
    degree3_check,
    degree4_check,
    exhaustive_exception_search,
)
from transcend.errors import InputError
from transcend.numeric import total_value
from transcend.poly import RationalPolynomial as P, from_linear_factors, poly_gcd

from conftest import Q4_DEN, Q4_NUM, Q6_DEN, Q6_NUM


def test_classify_examples():
    v = classify_sum(Q4_NUM, Q4_DEN)
    assert (v.kind, v.value) == (RATIONAL, 0)
    assert v.certificate.vanishes
    v = classify_sum(P([1]), from_linear_factors([(3, 1), (3, 2), (3, 3)]))
    assert v.kind == TRANSCENDENTAL and v.value is None
    v = classify_sum(P([1]), from_linear_factors([(2, 1), (2, 2), (2, 3)]))
    assert v.kind == TRANSCENDENTAL
    assert v.reduced.offset == F(-1, 2)
    assert v.reduced.q == 2 and v.reduced.terms == ((1, 1), (2, -1))


def test_classify_degenerate_is_rational_without_certificate():
    v = classify_sum(P([1]), from_linear_factors([(1, 1), (1, 2), (1, 3)]))
    assert v.kind == RATIONAL and v.value == F(1, 4) and v.certificate is None


@pytest.mark.parametrize("q, s1, s2, expected", [(3, 1, 2, True), (3, 1, 4, False), (4, 2, 4, True)])
def test_degree2_examples(q, s1, s2, expected):
    assert degree2_criterion(q, s1, s2) is expected


def test_degree2_rejects_pole():
    with pytest.raises(InputError):
        degree2_criterion(3, 0, 1)


def _admissible(q, s):
    return not (s <= 0 and s % q == 0)


def test_degree2_agrees_with_classifier():
    for q in range(1, 11):
        svals = [s for s in range(-q, 2 * q + 1) if _admissible(q, s)]
        for s1 in svals:
            for s2 in svals:
                if s1 >= s2:
                    continue
                v = classify_sum(P([1]), from_linear_factors([(q, s1), (q, s2)]))
                assert degree2_criterion(q, s1, s2) == (v.kind == TRANSCENDENTAL), (q, s1, s2)


def test_degree3_examples():
    v = degree3_check(3, (1, 2, 3), P([1]))
    assert v.kind == TRANSCENDENTAL
    v = degree3_check(4, (1, 2, 4), P([1]))
    assert v.kind == TRANSCENDENTAL
    assert classify_sum(P([1]), from_linear_factors([(4, 1), (4, 2), (4, 4)])).kind == TRANSCENDENTAL
    v = degree3_check(3, (1, 4, 7), P([1]))
    assert v.kind == RATIONAL and v.reduced.is_degenerate
    assert any("hypotheses fail" in n for n in v.notes)


def test_degree3_exclusion_clause_falls_through():
    # 3n+2 cancels the factor (3n+2): what remains telescopes to 1/3
    v = degree3_check(3, (1, 4, 2), P([2, 3]))
    assert v.kind == RATIONAL and v.value == F(1, 3)
    assert any("hypotheses fail" in n for n in v.notes)


def test_degree4_exceptional_identities():
    v = degree4_check(4, (1, 2, 3, 4), Q4_NUM)
    assert (v.kind, v.value, v.exceptional) == (RATIONAL, 0, "q4")
    v = degree4_check(6, (1, 2, 4, 5), Q6_NUM)
    assert (v.kind, v.value, v.exceptional) == (RATIONAL, 0, "q6")
    v = degree4_check(6, (5, 4, 2, 1), Q6_NUM * F(-7, 3))
    assert v.exceptional == "q6"


def test_degree4_generic():
    v = degree4_check(5, (1, 2, 3, 4), P([0, 0, 1]))
    assert v.kind == TRANSCENDENTAL and v.exceptional is None


@pytest.mark.parametrize(
    "q, residues, num",
    [
        (4, (1, 2, 3), P([1])),
        (4, (2, 4, 6, 8), P([1])),
        (6, (2, 4, 6, 3), P([1, 0, 0, 1])),
        (4, (1, 2, 3, 4), P([1, 4])),  # shares the factor 4n+1
    ],
)
def test_degree4_rejects(q, residues, num):
    with pytest.raises(InputError):
        degree4_check(q, residues, num)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 12), st.data())
def test_degree_checks_agree_with_classifier(q, data):
    m = data.draw(st.sampled_from([3, 4]))
    if m == 4:
        assume(q >= 4)
        residues = data.draw(st.lists(st.integers(1, q), min_size=4, max_size=4, unique=True))
    else:
        residues = data.draw(st.lists(st.integers(-q + 1, 2 * q), min_size=3, max_size=3, unique=True))
        assume(all(_admissible(q, s) for s in residues))
    coeffs = data.draw(st.lists(st.integers(-9, 9), min_size=m - 1, max_size=m - 1))
    num = P(coeffs)
    assume(not num.is_zero())
    den = from_linear_factors([(q, s) for s in residues])
    assume(poly_gcd(num, den).degree == 0)
    if m == 4:
        assume(gcd(q, *residues) == 1)
        v = degree4_check(q, residues, num)
    else:
        v = degree3_check(q, residues, num)
    assert v.kind == classify_sum(num, den).kind


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.data())
def test_rational_verdicts_match_numerics(q, data):
    residues = data.draw(st.lists(st.integers(-q + 1, 2 * q), min_size=2, max_size=5, unique=True))
    assume(all(_admissible(q, s) for s in residues))
    coeffs = data.draw(st.lists(st.integers(-5, 5), min_size=1, max_size=len(residues) - 1))
    num = P(coeffs)
    den = from_linear_factors([(q, s) for s in residues])
    assume(not num.is_zero() and poly_gcd(num, den).degree == 0)
    v = classify_sum(num, den)
    if v.kind == RATIONAL:
        assert abs(total_value(num, den).value - float(v.value)) < 1e-9


def test_search_small():
    assert exhaustive_exception_search(5) == [(4, (1, 2, 3, 4), (1, -3, 1, 1))]
    assert exhaustive_exception_search(3) == []


def test_search_parallel_matches_serial():
    assert exhaustive_exception_search(9, workers=2) == exhaustive_exception_search(9)


def test_search_hits_need_a_noncoprime_residue():
    for q, residues, _ in exhaustive_exception_search(12):
        assert any(gcd(s, q) > 1 for s in residues)
