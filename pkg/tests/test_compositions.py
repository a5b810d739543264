from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from gjms_sums.compositions import (
    Composition,
    count_compositions,
    enumerate_compositions,
    integrality_report,
    multiplicity,
)
from oracles import compositions, mult


def test_small_enumerations():
    assert list(enumerate_compositions(1)) == [(1,)]
    assert set(enumerate_compositions(3)) == {(3,), (1, 2), (2, 1), (1, 1, 1)}
    assert count_compositions(5) == len(list(enumerate_compositions(5))) == 16


@pytest.mark.parametrize("n", range(1, 11))
def test_enumeration_matches_cut_patterns(n):
    got = list(enumerate_compositions(n))
    assert len(got) == len(set(got)) == 2 ** (n - 1)
    assert set(got) == set(compositions(n))
    assert got == sorted(got)


def test_bad_size():
    with pytest.raises(ValueError):
        list(enumerate_compositions(0))
    with pytest.raises(ValueError):
        Composition((2, 0))


@pytest.mark.parametrize("parts, expected", [
    ((7,), 1),
    ((1, 1), -1),
    ((1, 1, 1), 3),
    ((1, 2), -2),
    ((2, 1), -2),
])
def test_multiplicity_examples(parts, expected):
    assert multiplicity(Composition(parts)) == expected


compositions_st = st.lists(st.integers(1, 5), min_size=1, max_size=6)


@given(compositions_st)
def test_multiplicity_oracle_and_reversal(parts):
    I = Composition(parts)
    assert multiplicity(I) == mult(tuple(parts))
    assert multiplicity(I) == multiplicity(I.reverse())


def test_single_part_is_one():
    assert all(multiplicity(Composition((n,))) == 1 for n in range(1, 20))


def test_integrality_diagnostic():
    report = integrality_report(12)
    assert all(report.values())
    assert isinstance(multiplicity((2, 2)), F)
