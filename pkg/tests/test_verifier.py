from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from gjms_sums.poch_poly import X, Y, evaluate, gjms_poly
from gjms_sums.records import PASS
from gjms_sums.verifier import (
    STRATEGIES,
    check_decomposition,
    check_thm_2_5,
    check_thm_3_1,
    check_vw_square,
    check_w_relation,
    m_sum,
    m_sum_with_stats,
    partial_sum_bruteforce,
    partial_sum_closed,
    q_curvature_check,
    q_curvature_point,
    q_curvature_pointwise,
    q_curvature_rhs,
    q_sum_poly,
    spectral_eval,
    spectral_point,
    vw_coeffs,
)
from oracles import SAMPLE_POINTS, gbinom, msum_value


def test_m_sum_small():
    assert m_sum(1) == X * Y
    assert m_sum(2) == 1 - X**2 - Y**2
    assert m_sum(3) == 12 * X * Y


@pytest.mark.parametrize("n", range(1, 9))
def test_m_sum_against_scalar_oracle(n):
    P = m_sum(n)
    for x, y in SAMPLE_POINTS:
        assert evaluate(P, x, y) == msum_value(n, x, y)


@pytest.mark.parametrize("n", range(1, 11))
def test_strategies_agree(n):
    results = {s: m_sum_with_stats(n, s)[0] for s in STRATEGIES}
    assert len(set(results.values())) == 1


def test_memo_counts():
    _, memo = m_sum_with_stats(12, "memo")
    _, naive = m_sum_with_stats(12, "naive")
    assert memo.terms == naive.terms == 2**11
    assert memo.mults == 2**12 - 1 - 12
    assert naive.mults == 11 * 2**10


def test_closed_form_records():
    for n in (1, 2):
        assert check_thm_2_5(n).status == PASS
    rec = check_thm_2_5(4)
    assert rec.status == PASS
    assert rec.rhs == (72 * (1 - X**2 - Y**2)).render()


def test_partial_sums():
    assert partial_sum_bruteforce(2, 1) == -X * Y
    assert partial_sum_bruteforce(3, 1) == -2 * gjms_poly(2) + 3 * X**2 * Y**2
    assert partial_sum_bruteforce(3, 2) == -2 * X * Y
    for N, a in ((2, 1), (3, 1), (3, 2), (6, 4), (7, 1)):
        assert partial_sum_closed(N, a) == partial_sum_bruteforce(N, a)
    with pytest.raises(ValueError):
        partial_sum_bruteforce(3, 3)


def test_decomposition_small():
    assert all(check_decomposition(n).passed for n in range(1, 7))


def test_q_sum():
    assert q_sum_poly(1) == Y
    assert check_thm_3_1(1).status == PASS
    assert check_thm_3_1(2).status == PASS


@given(st.integers(1, 9), st.integers(1, 9))
def test_q_curvature_degree_one(q, p):
    x0, y0 = q_curvature_point(q, p)
    assert x0 == F(q + p, 2) - 1 and y0 == F(p - q, 2)
    assert evaluate(q_sum_poly(1), x0, y0) == q_curvature_rhs(1, q, p) == F(p - q, 2)


def test_q_curvature_examples():
    for N in (1, 3, 5):
        assert q_curvature_rhs(N, 4, 4) == 0
    assert q_curvature_check(2, 2, 2).status == PASS


@pytest.mark.parametrize("N, q, p", [(2, 1, 2), (3, 2, 5), (4, 3, 3), (5, 1, 1)])
def test_q_curvature_scalar_route(N, q, p):
    direct = q_curvature_pointwise(N, q, p)
    if direct is not None:
        assert direct == q_curvature_rhs(N, q, p)
    rhs = factorial(N) * factorial(N - 1) * sum(
        (-1) ** M * gbinom(F(q, 2), M) * gbinom(F(p, 2), N - M) for M in range(N + 1)
    )
    assert q_curvature_rhs(N, q, p) == rhs


def test_vw_examples():
    v, w = vw_coeffs(3, 3, 4)
    assert w[1] == 0
    v, _ = vw_coeffs(2, 0, 2)
    assert v[1] == F(-1, 2) and v[2] == F(1, 16)
    assert check_vw_square(3, 5, 6).passed
    assert all(check_w_relation(N, q, p).passed for N in (1, 2, 3) for q in (1, 2) for p in (2, 5))


def test_spectral():
    assert spectral_point(3, 4, 0, 0) == q_curvature_point(3, 4)
    assert spectral_point(3, 2, 1, 0) == (F(5, 2), F(-3, 2))
    rec = spectral_eval(1, 3, 2, 1, 0)
    assert rec.status == PASS and rec.lhs == "-15/4"
    for k in range(3):
        for l in range(3):
            assert spectral_eval(2, 2, 3, k, l).passed
