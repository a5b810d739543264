from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from gjms_sums.compositions import Composition
from gjms_sums.poch_poly import (
    BiPoly,
    DivisibilityError,
    PochPoly,
    X,
    Y,
    binom_poly,
    centered_poch,
    evaluate,
    exact_div_linear,
    from_monomial,
    gjms_factored,
    gjms_poly,
    mul_poch,
    product_over_composition,
    product_over_composition_bivariate,
    to_monomial,
)
from gjms_sums.unipoly import UniPoly
from oracles import SAMPLE_POINTS, cpoch, op_value

half = F(1, 2)


def test_centered_poch_small():
    assert to_monomial(centered_poch(0)) == UniPoly([1], "X")
    assert to_monomial(centered_poch(1)) == UniPoly([0, half], "X")
    assert to_monomial(centered_poch(2)) == UniPoly([F(-1, 4), 0, F(1, 4)], "X")


@pytest.mark.parametrize("d", range(9))
def test_centered_poch_oracle(d):
    u = to_monomial(centered_poch(d))
    for t in (F(0), F(3, 7), F(-5, 2), F(4)):
        assert u(t) == cpoch(d, t)


def test_products_examples():
    C = centered_poch
    assert mul_poch(C(0), C(5)) == C(5)
    assert mul_poch(C(1), C(1)) == PochPoly({2: 1, 0: F(1, 4)})
    assert mul_poch(C(1), C(2)) == PochPoly({3: 1, 1: F(3, 4)})


def test_basis_change():
    assert to_monomial(centered_poch(2)).coeffs == (F(-1, 4), 0, F(1, 4))
    assert from_monomial(UniPoly([0, 0, 1], "X")) == PochPoly({2: 4, 0: 1})


poch_st = st.dictionaries(st.integers(0, 8), st.fractions(-5, 5, max_denominator=4), max_size=4).map(PochPoly)


@given(poch_st, poch_st)
def test_product_commutes_with_basis_change(p, q):
    prod = mul_poch(p, q)
    assert to_monomial(prod) == to_monomial(p) * to_monomial(q)
    assert prod == mul_poch(q, p)


@given(st.lists(st.fractions(-6, 6, max_denominator=5), max_size=8))
def test_basis_roundtrip(cs):
    u = UniPoly(cs, "X")
    assert to_monomial(from_monomial(u)) == u


def test_gjms_small():
    assert gjms_poly(1) == X * Y
    assert gjms_poly(2) == (X**2 - 1) * (Y**2 - 1)
    assert gjms_poly(3) == X * Y * (X**2 - 4) * (Y**2 - 4)
    assert gjms_factored(2) == (X * Y) ** 2 - (X**2 + Y**2) + 1
    assert gjms_factored(3) == X * Y * ((X * Y) ** 2 - 4 * (X**2 + Y**2) + 16)


@pytest.mark.parametrize("n", range(1, 10))
def test_gjms_against_pochhammer_form(n):
    P = gjms_poly(n)
    assert P == gjms_factored(n)
    for x, y in SAMPLE_POINTS:
        assert evaluate(P, x, y) == op_value(n, x, y)


def test_gjms_symmetries():
    for n in range(1, 9):
        P = gjms_poly(n)
        assert P.swap() == P
        assert P.negate_args() == P


def test_product_over_composition():
    assert product_over_composition((1, 1)) == X**2 * Y**2
    assert product_over_composition((2,)) == gjms_poly(2)
    assert product_over_composition((1, 1, 1)) == X**3 * Y**3


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_product_routes_agree(parts):
    I = Composition(parts)
    assert product_over_composition(I) == product_over_composition_bivariate(I)


def test_exact_division():
    assert exact_div_linear(X * Y, 1) == Y
    assert exact_div_linear(gjms_poly(2), 2) == (X + 1) * (Y**2 - 1)
    with pytest.raises(DivisibilityError):
        exact_div_linear(X * Y, 2)


@given(st.integers(-4, 6), st.lists(st.fractions(-5, 5, max_denominator=3), min_size=1, max_size=6))
def test_division_inverts_multiplication(a, cs):
    q = BiPoly.from_unipoly(UniPoly(cs, "X"), "X") * (Y + 2)
    assert exact_div_linear(q * (X + 1 - a), a) == q


def test_evaluate_and_binom():
    assert evaluate(X * Y, F(5, 2), 0) == 0
    ell = (X - Y + 1) * half
    assert binom_poly(ell, 0) == BiPoly.const(1)
    assert binom_poly(ell, 2) == ((X - Y) ** 2 - 1) * F(1, 8)


def test_rendering():
    assert (1 - X**2 - Y**2).render() == "-X^2 - Y^2 + 1"
    assert PochPoly({2: 1, 0: 1}).render() == "C_2(X) + C_0(X)"
