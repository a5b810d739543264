"""Exact rational scalars and the Pochhammer / binomial / factorial primitives.

Every scalar in the package is a :class:`fractions.Fraction`, which already keeps
values in lowest terms with a positive denominator and raises
``ZeroDivisionError`` on division by zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "pochhammer",
    "gen_binomial",
    "factorial_like",
    "c_N",
    "render_rational",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float has already lost exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def pochhammer(alpha, m: int) -> Fraction:
    """Rising factorial ``alpha (alpha+1) ... (alpha+m-1)``; 1 when ``m == 0``."""
    if m < 0:
        raise ValueError("Pochhammer length must be non-negative")
    alpha = as_rational(alpha)
    num, den = alpha.numerator, alpha.denominator
    # integer arithmetic on the numerators, one division at the end
    acc = 1
    for i in range(m):
        acc *= num + i * den
        if acc == 0:
            return Fraction(0)
    return Fraction(acc, den**m)


def gen_binomial(alpha, k: int) -> Fraction:
    """Binomial coefficient ``alpha choose k`` for rational ``alpha``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    alpha = as_rational(alpha)
    num, den = alpha.numerator, alpha.denominator
    acc = 1
    for i in range(k):
        acc *= num - i * den
    return Fraction(acc, den**k * factorial(k))


@lru_cache(maxsize=None)
def factorial_like(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return Fraction(factorial(n))


def c_N(N: int) -> Fraction:
    """The normalising constant ``2^(N-1) N! (N-1)!``."""
    if N < 1:
        raise ValueError("c_N needs N >= 1")
    return Fraction(2 ** (N - 1) * factorial(N) * factorial(N - 1))


def render_rational(x: Fraction) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
