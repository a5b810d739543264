from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from gjms_sums.hypergeom import (
    HypergeometricPoleError,
    HypSpec,
    NonTerminatingSeriesError,
    chu_vandermonde,
    eval_terminating,
    hyp,
    lemma_a3_check,
    lemma_a3_sides,
    pfaff_saalschuetz,
    pfaff_transformation_sides,
    termination_index,
)
from gjms_sums.records import PASS, SKIPPED
from oracles import poch, series

rat = st.fractions(min_value=-10, max_value=10, max_denominator=7)


def test_series_examples():
    assert hyp([0, F(1, 3), 5], [F(1, 2), 2]) == 1
    assert hyp([-2, 1], [3]) == F(1, 2)
    with pytest.raises(NonTerminatingSeriesError):
        hyp([F(1, 2), 1], [3])


def test_termination_index():
    assert termination_index(HypSpec([-3, -5, F(1, 2)], [1])) == 3


def test_numerator_truncation_before_pole():
    # the denominator would vanish at index 3, but the numerator stops at 2
    assert hyp([-2], [-2]) == 1 + F(-2, -2) + F(-2 * -1, -2 * -1 * 2)
    with pytest.raises(HypergeometricPoleError):
        hyp([-3], [-1])


def test_chu_vandermonde_examples():
    assert chu_vandermonde(F(7, 2), 3, 0) == 1
    assert chu_vandermonde(1, 3, 2) == F(1, 2)
    for n in range(1, 6):
        assert chu_vandermonde(F(5, 3), F(5, 3), n) == 0


def test_pfaff_saalschuetz_examples():
    assert pfaff_saalschuetz(F(1, 3), 2, 5, 0) == 1
    assert pfaff_saalschuetz(1, 2, 4, 2) == F(9, 5)
    assert pfaff_saalschuetz(0, F(2, 3), F(7, 2), 4) == 1


@given(rat, rat, st.integers(0, 12))
def test_chu_vandermonde_property(b, c, n):
    assume(poch(c, n) != 0)
    assert chu_vandermonde(b, c, n) == eval_terminating(HypSpec([-n, b], [c])) == series([-n, b], [c])


@given(rat, rat, rat, st.integers(0, 10))
def test_pfaff_saalschuetz_property(a, b, c, n):
    d = 1 + a + b - c - n
    assume(poch(c, n) != 0 and poch(d, n) != 0 and poch(c - a - b, n) != 0)
    assert pfaff_saalschuetz(a, b, c, n) == series([a, b, -n], [c, d])


@given(rat, rat, rat, st.integers(0, 8))
def test_pfaff_transformation_property(A, C, z, n):
    assume(z != 1 and poch(C, n) != 0)
    lhs, rhs = pfaff_transformation_sides(A, -n, C, z)
    assert lhs == rhs


def test_transform_examples():
    assert lemma_a3_sides(F(2, 7), F(1, 3), 0) == (1, 1)
    rec = lemma_a3_check(1, 2, 1)
    assert rec.status == PASS and rec.lhs == rec.rhs == "1"
    assert lemma_a3_check(1, 3, 2).status == PASS


@given(rat, rat, st.integers(0, 8))
def test_transform_property(a, e, N):
    assume(e.denominator != 1 and (a - e).denominator != 1)
    lhs, rhs = lemma_a3_sides(a, e, N)
    assert lhs == rhs == series([a, F(1 - N, 2), F(-N, 2)], [e, 1 - N - e])


def test_transform_pole_is_skipped():
    rec = lemma_a3_check(F(1, 2), -1, 3)
    assert rec.status == SKIPPED and "pole" in rec.reason
