"""Terminating hypergeometric series at rational arguments.

Termination convention: summation runs until the first index at which a
numerator Pochhammer symbol becomes zero. A denominator Pochhammer symbol
that vanishes before that point is a pole and raises
:class:`HypergeometricPoleError`. The numerator is checked first at each
index, so a numerator and denominator vanishing together truncate cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_arith import as_rational, pochhammer
from .records import CheckRecord, run_check, skipped

__all__ = [
    "HypSpec",
    "NonTerminatingSeriesError",
    "HypergeometricPoleError",
    "termination_index",
    "eval_terminating",
    "hyp",
    "chu_vandermonde",
    "pfaff_saalschuetz",
    "pfaff_transformation_sides",
    "lemma_a3_sides",
    "lemma_a3_check",
]


class NonTerminatingSeriesError(ValueError):
    pass


class HypergeometricPoleError(ArithmeticError):
    pass


def _nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypSpec:
    """``pFq[numer; denom; z]`` with exact rational data."""

    numer: tuple[Fraction, ...]
    denom: tuple[Fraction, ...]
    z: Fraction = field(default=Fraction(1))

    def __init__(self, numer: Sequence, denom: Sequence, z=1):
        object.__setattr__(self, "numer", tuple(as_rational(a) for a in numer))
        object.__setattr__(self, "denom", tuple(as_rational(b) for b in denom))
        object.__setattr__(self, "z", as_rational(z))


def termination_index(spec: HypSpec) -> int:
    """Least ``n*`` with some numerator parameter equal to ``-n*``."""
    stops = [-a for a in spec.numer if _nonpositive_int(a)]
    if not stops:
        raise NonTerminatingSeriesError(f"no non-positive integer numerator parameter in {spec.numer}")
    return int(min(stops))


def eval_terminating(spec: HypSpec) -> Fraction:
    n_star = termination_index(spec)
    total = Fraction(1)
    term = Fraction(1)
    for m in range(n_star):
        num = Fraction(1)
        for a in spec.numer:
            num *= a + m
        if num == 0:
            break
        den = Fraction(m + 1)
        for b in spec.denom:
            if b + m == 0:
                raise HypergeometricPoleError(
                    f"denominator parameter {b} gives a zero Pochhammer at index {m + 1}"
                )
            den *= b + m
        term = term * num * spec.z / den
        total += term
    return total


def hyp(numer: Sequence, denom: Sequence, z=1) -> Fraction:
    return eval_terminating(HypSpec(numer, denom, z))


def chu_vandermonde(b, c, n: int) -> Fraction:
    """Closed form ``(c-b)_n / (c)_n`` of ``2F1(-n, b; c; 1)``."""
    b, c = as_rational(b), as_rational(c)
    den = pochhammer(c, n)
    if den == 0:
        raise HypergeometricPoleError(f"(c)_n vanishes for c={c}, n={n}")
    return pochhammer(c - b, n) / den


def pfaff_saalschuetz(a, b, c, n: int) -> Fraction:
    """Closed form of the balanced ``3F2(a, b, -n; c, 1+a+b-c-n; 1)``."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    den = pochhammer(c, n) * pochhammer(c - a - b, n)
    if den == 0:
        raise HypergeometricPoleError(f"vanishing denominator for c={c}, c-a-b={c - a - b}, n={n}")
    return pochhammer(c - a, n) * pochhammer(c - b, n) / den


def pfaff_transformation_sides(A, B, C, z) -> tuple[Fraction, Fraction]:
    """Both sides of ``2F1(A,B;C;z) = (1-z)^-B 2F1(C-A,B;C;z/(z-1))``.

    ``B`` must be a non-positive integer so that the power stays rational and
    both series terminate.
    """
    A, B, C, z = (as_rational(v) for v in (A, B, C, z))
    if not _nonpositive_int(B):
        raise ValueError("B must be a non-positive integer")
    if z == 1:
        raise ValueError("z = 1 is excluded")
    lhs = hyp([A, B], [C], z)
    rhs = (1 - z) ** int(-B) * hyp([C - A, B], [C], -z / (1 - z))
    return lhs, rhs


def lemma_a3_sides(a, e, N: int) -> tuple[Fraction, Fraction]:
    a, e = as_rational(a), as_rational(e)
    lhs = hyp([a, Fraction(1 - N, 2), Fraction(-N, 2)], [e, 1 - N - e], 1)
    e_poch = pochhammer(e, N)
    if e_poch == 0:
        raise HypergeometricPoleError(f"(e)_N vanishes for e={e}, N={N}")
    rhs = (
        Fraction(1, 2**N)
        * pochhammer(e - a, N)
        / e_poch
        * hyp([1 - a - e - N, -N], [1 + a - e - N], -1)
    )
    return lhs, rhs


def lemma_a3_check(a, e, N: int) -> CheckRecord:
    """Compare the 3F2 at 1 with its 2F1-at-(-1) transform, both summed termwise."""
    a, e = as_rational(a), as_rational(e)
    params = {"a": a, "e": e, "N": N}
    try:
        return run_check("f32_transform", params, lambda: lemma_a3_sides(a, e, N))
    except HypergeometricPoleError as exc:
        return skipped("f32_transform", params, f"pole: {exc}")
