"""Independent scalar oracles used by the tests.

Nothing here imports the package: compositions come from itertools, the
operator polynomial from its Pochhammer form, series by plain summation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial, prod


def poch(a, m):
    return prod((Fraction(a) + i for i in range(m)), start=Fraction(1))


def compositions(n):
    # every 0/1 cut pattern between n unit cells
    for cuts in product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def mult(parts):
    n = sum(parts)
    r = len(parts)
    den = prod(factorial(i) * factorial(i - 1) for i in parts)
    den *= prod(parts[j] + parts[j + 1] for j in range(r - 1))
    return -Fraction((-1) ** r * factorial(n) * factorial(n - 1), den)


def cpoch(d, t):
    return poch((Fraction(t) + 1 - d) / 2, d)


def op_value(n, x, y):
    return 4**n * cpoch(n, x) * cpoch(n, y)


def msum_value(n, x, y):
    return sum(mult(I) * prod(op_value(i, x, y) for i in I) for I in compositions(n))


def series(numer, denom, z=1, terms=200):
    total, m = Fraction(0), 0
    while m < terms:
        t = prod((poch(a, m) for a in numer), start=Fraction(1))
        if t == 0:
            break
        t /= prod((poch(b, m) for b in denom), start=Fraction(1)) * factorial(m)
        total += t * Fraction(z) ** m
        m += 1
    return total


def gbinom(a, k):
    return prod((Fraction(a) - i for i in range(k)), start=Fraction(1)) / factorial(k)


SAMPLE_POINTS = [
    (Fraction(0), Fraction(0)),
    (Fraction(1, 2), Fraction(-3, 2)),
    (Fraction(7, 3), Fraction(2, 5)),
    (Fraction(-5, 4), Fraction(11, 6)),
    (Fraction(3), Fraction(-1)),
]
