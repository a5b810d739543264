"""Compositions of an integer and their GJMS-sum multiplicities."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

__all__ = [
    "Composition",
    "enumerate_compositions",
    "count_compositions",
    "multiplicity",
    "multiplicity_parts",
    "integrality_report",
]


class Composition(tuple):
    """An ordered, nonempty sequence of positive integers.

    Behaves like a tuple of its parts, so it can be used directly as a
    dictionary key.
    """

    __slots__ = ()

    def __new__(cls, parts: Sequence[int]):
        parts = tuple(parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        for part in parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise ValueError(f"composition parts must be positive integers, got {part!r}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def last(self) -> int:
        return self[-1]

    def reverse(self) -> "Composition":
        return Composition(self[::-1])

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def enumerate_compositions(N: int) -> Iterator[Composition]:
    """Yield every composition of ``N`` once, lexicographically by parts.

    For ``N = 3`` the order is ``(1,1,1), (1,2), (2,1), (3,)``.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    for parts in _compositions(N):
        yield Composition(parts)


def count_compositions(N: int) -> int:
    if N < 1:
        raise ValueError("N must be positive")
    return 2 ** (N - 1)


def multiplicity_parts(parts: Sequence[int]) -> Fraction:
    """Multiplicity of a raw parts tuple, without building a Composition."""
    r = len(parts)
    size = sum(parts)
    den = 1
    for part in parts:
        den *= factorial(part) * factorial(part - 1)
    for left, right in zip(parts, parts[1:]):
        den *= left + right
    num = factorial(size) * factorial(size - 1)
    if r % 2 == 0:
        num = -num
    return Fraction(num, den)


def multiplicity(I) -> Fraction:
    """``m_I = -(-1)^r |I|! (|I|-1)! / (prod I_j!(I_j-1)! * prod (I_j+I_{j+1}))``."""
    if not isinstance(I, Composition):
        I = Composition(I)
    return multiplicity_parts(I)


def integrality_report(max_size: int) -> dict[int, bool]:
    """For each size ``N <= max_size``, whether every ``m_I`` with ``|I| = N`` is an integer.

    Diagnostic only; integrality is not assumed anywhere.
    """
    return {
        N: all(multiplicity_parts(I).denominator == 1 for I in _compositions(N))
        for N in range(1, max_size + 1)
    }
