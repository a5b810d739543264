import random
from fractions import Fraction as F
from math import comb, factorial, prod

import pytest
from hypothesis import given, strategies as st

from gjms_sums.finite_diff import (
    UniPoly,
    binomial_basis_coeffs,
    binomial_poly,
    check_lemma_a1,
    check_lemma_a2,
    correction_sign,
    from_binomial_basis,
    lemma_a2_sides,
)
from gjms_sums.records import FAIL, PASS

coeff_lists = st.lists(st.fractions(-9, 9, max_denominator=5), max_size=10)


def test_binomial_coeffs_examples():
    assert binomial_basis_coeffs(UniPoly([1])) == [1]
    assert binomial_basis_coeffs(UniPoly([0, 0, 1])) == [0, 1, 2]
    assert binomial_basis_coeffs(binomial_poly(3)) == [0, 0, 0, 1]


@given(coeff_lists)
def test_binomial_roundtrip(cs):
    p = UniPoly(cs)
    assert from_binomial_basis(binomial_basis_coeffs(p)) == p


def test_alt_sum_examples():
    assert check_lemma_a1(UniPoly([0, 0, 1]), 2).status == PASS
    assert check_lemma_a1(UniPoly([0, 0, 1]), 2).lhs == "2"
    assert check_lemma_a1(UniPoly([1]), 0).status == PASS
    rec = check_lemma_a1(UniPoly([3, -1, 2]), 5)
    assert rec.status == PASS and rec.lhs == "0"


@given(coeff_lists, st.integers(0, 12))
def test_alt_sum_property(cs, M):
    assert check_lemma_a1(UniPoly(cs), M).passed


def test_alt_fraction_examples():
    assert check_lemma_a2(UniPoly([1]), 1).status == PASS
    assert check_lemma_a2(binomial_poly(2), 1).status == PASS
    assert check_lemma_a2(UniPoly([0, 1]), 0).status == PASS
    # a fixed plus sign fails here
    assert check_lemma_a2(UniPoly([0, 1]), 0, convention="plus").status == FAIL


def test_alt_fraction_degree_guard():
    with pytest.raises(ValueError):
        lemma_a2_sides(UniPoly([0, 0, 0, 1]), 1)


@pytest.mark.parametrize("M", range(9))
def test_correction_sign_by_sampling(M):
    """Recover the constant correction numerically and read off its sign."""
    rng = random.Random(M)
    cs = [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(M + 1)] + [F(rng.randint(1, 9))]
    p = UniPoly(cs)
    c_top = cs[-1] * factorial(M + 1)  # leading binomial-basis coefficient
    consts = set()
    for X in (F(1, 3), F(-7, 2), F(25, 4), F(M + 5, 7) + F(1, 11)):
        lhs = sum(F((-1) ** b * comb(M, b)) * p(b) / (X - b) for b in range(M + 1))
        main = (-1) ** M * factorial(M) * p(X) / prod(X - r for r in range(M + 1))
        consts.add(lhs - main)
    assert len(consts) == 1
    sign = consts.pop() / (c_top / (M + 1))
    assert sign == (-1) ** (M + 1) == correction_sign(M)


@given(st.integers(0, 10), st.data())
def test_alt_fraction_property(M, data):
    deg = data.draw(st.integers(0, M + 1))
    cs = data.draw(st.lists(st.fractions(-9, 9, max_denominator=5), min_size=deg + 1, max_size=deg + 1))
    assert check_lemma_a2(UniPoly(cs), M).passed
