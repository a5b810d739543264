"""Dense univariate polynomials over the rationals (monomial basis)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import as_rational, render_rational

__all__ = ["UniPoly"]


class UniPoly:
    """Polynomial ``sum c_i t^i`` stored as a trimmed coefficient tuple.

    ``coeffs[i]`` is the coefficient of ``t^i``. The zero polynomial has an
    empty coefficient tuple and degree ``None``.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k: int, coeff=1, var: str = "x") -> "UniPoly":
        return cls([0] * k + [coeff], var)

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1, var: str = "x") -> "UniPoly":
        """``lead * prod (t - r)`` over the given roots."""
        p = cls([lead], var)
        for r in roots:
            p = p * cls([-as_rational(r), 1], var)
        return p

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _check(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            self._check(other)
            return other
        return UniPoly([other], self.var)

    def __add__(self, other) -> "UniPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            s = as_rational(other)
            return UniPoly([c * s for c in self.coeffs], self.var)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        t = as_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly([other], self.var).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self.render()!r})"

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            pieces.append((c, mono))
        return _join_terms(pieces)


def _join_terms(pieces: list[tuple[Fraction, str]]) -> str:
    """Join (coefficient, monomial) pairs as ``a*m1 - b*m2 + c``."""
    out = []
    for idx, (c, mono) in enumerate(pieces):
        neg = c < 0
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{render_rational(mag)}*{mono}"
        else:
            body = render_rational(mag)
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
