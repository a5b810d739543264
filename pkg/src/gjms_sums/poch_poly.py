"""Polynomials in the commuting variables X and Y.

Two representations are kept side by side:

* :class:`PochPoly` -- univariate, over the centered Pochhammer basis
  ``C_d(t) = ((t + 1 - d)/2)_d``;
* :class:`BiPoly` -- sparse bivariate monomial basis, ``(i, j) -> coeff`` for
  ``X^i Y^j``.

The GJMS polynomial ``P_{2N} = 2^{2N} C_N(X) C_N(Y)`` is separable:
``P_{2N} = u_N(X) u_N(Y)`` with the integer polynomial
``u_N(t) = prod_{i<N} (t + 1 - N + 2i)``. Products over compositions inherit
this, which is what the suffix-product cache exploits.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .exact_arith import as_rational, pochhammer
from .unipoly import UniPoly, _join_terms

__all__ = [
    "DivisibilityError",
    "PochPoly",
    "BiPoly",
    "X",
    "Y",
    "centered_poch",
    "centered_poch_monomial",
    "poch_structure_constants",
    "mul_poch",
    "to_monomial",
    "from_monomial",
    "gjms_factor",
    "gjms_poly",
    "gjms_factored",
    "int_poly_mul",
    "SuffixProductCache",
    "product_over_composition",
    "product_over_composition_bivariate",
    "exact_div_linear",
    "evaluate",
    "binom_poly",
]


class DivisibilityError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


# ---------------------------------------------------------------------------
# Pochhammer basis
# ---------------------------------------------------------------------------

class PochPoly:
    """Univariate polynomial ``sum_d coeffs[d] * C_d(var)``."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Mapping[int, object] | None = None, var: str = "X"):
        clean: dict[int, Fraction] = {}
        for d, c in (coeffs or {}).items():
            if d < 0:
                raise ValueError("basis index must be non-negative")
            c = as_rational(c)
            if c:
                clean[int(d)] = c
        self.coeffs = clean
        self.var = var

    @property
    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def __add__(self, other: "PochPoly") -> "PochPoly":
        _same_var(self, other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return PochPoly(out, self.var)

    def __mul__(self, other) -> "PochPoly":
        if isinstance(other, PochPoly):
            return mul_poch(self, other)
        s = as_rational(other)
        return PochPoly({d: c * s for d, c in self.coeffs.items()}, self.var)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PochPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self.coeffs.items())))

    def render(self) -> str:
        pieces = [(c, f"C_{d}({self.var})") for d, c in sorted(self.coeffs.items(), reverse=True)]
        return _join_terms(pieces) if pieces else "0"

    def __repr__(self) -> str:
        return f"PochPoly({self.render()!r})"


def _same_var(p: PochPoly, q: PochPoly) -> None:
    if p.var != q.var:
        raise ValueError(f"variable mismatch: {p.var} vs {q.var}")


def centered_poch(d: int, var: str = "X") -> PochPoly:
    """The basis element ``C_d``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return PochPoly({d: 1}, var)


@lru_cache(maxsize=None)
def centered_poch_monomial(d: int) -> tuple[Fraction, ...]:
    """Monomial coefficients of ``C_d(t) = 2^-d prod_{i<d} (t + 1 - d + 2i)``."""
    coeffs = [Fraction(c, 2**d) for c in gjms_factor(d)]
    return tuple(coeffs)


@lru_cache(maxsize=None)
def poch_structure_constants(A: int, B: int) -> tuple[tuple[int, Fraction], ...]:
    """Pairs ``(A + B - 2j, coeff_j)`` expressing ``C_A C_B`` in the C-basis.

    ``coeff_j = (-1)^j (-A/2)_j (-B/2)_j (-(A+B)/2)_j / j!``. The sum stops at
    ``floor((A+B)/2)``, earlier when ``A`` or ``B`` is even because a
    Pochhammer factor vanishes.
    """
    out = []
    for j in range((A + B) // 2 + 1):
        c = (
            pochhammer(Fraction(-A, 2), j)
            * pochhammer(Fraction(-B, 2), j)
            * pochhammer(Fraction(-(A + B), 2), j)
            / factorial(j)
        )
        if c == 0:
            # (-A/2)_j and (-B/2)_j stay zero once they hit zero
            if (A % 2 == 0 and j > A // 2) or (B % 2 == 0 and j > B // 2):
                break
            continue
        out.append((A + B - 2 * j, -c if j % 2 else c))
    return tuple(out)


def mul_poch(p: PochPoly, q: PochPoly) -> PochPoly:
    """Multiply in the Pochhammer basis using the structure constants."""
    _same_var(p, q)
    out: dict[int, Fraction] = {}
    for A, a in p.coeffs.items():
        for B, b in q.coeffs.items():
            ab = a * b
            for d, c in poch_structure_constants(A, B):
                out[d] = out.get(d, 0) + ab * c
    return PochPoly(out, p.var)


def to_monomial(p: PochPoly) -> UniPoly:
    acc = [Fraction(0)] * ((p.degree or 0) + 1)
    for d, c in p.coeffs.items():
        for k, m in enumerate(centered_poch_monomial(d)):
            acc[k] += c * m
    return UniPoly(acc, p.var)


def from_monomial(u: UniPoly) -> PochPoly:
    """Inverse basis change, solving the triangular system from the top degree."""
    rest = list(u.coeffs)
    out: dict[int, Fraction] = {}
    for d in range(len(rest) - 1, -1, -1):
        lead = rest[d]
        if lead == 0:
            continue
        c = lead * 2**d  # C_d has leading coefficient 2^-d
        out[d] = c
        for k, m in enumerate(centered_poch_monomial(d)):
            rest[k] -= c * m
    return PochPoly(out, u.var)


# ---------------------------------------------------------------------------
# Bivariate polynomials
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse polynomial in X and Y with rational coefficients.

    Treated as immutable; arithmetic returns new objects. Zero coefficients
    are never stored, so equality is plain map equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = as_rational(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], Fraction]) -> "BiPoly":
        obj = cls.__new__(cls)
        obj.terms = {k: v for k, v in terms.items() if v}
        return obj

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def separable(cls, fx: Sequence, fy: Sequence, scale=1) -> "BiPoly":
        """``scale * fx(X) * fy(Y)`` from two monomial coefficient sequences."""
        scale = as_rational(scale)
        terms = {}
        for i, a in enumerate(fx):
            if a:
                sa = scale * a
                for j, b in enumerate(fy):
                    if b:
                        terms[(i, j)] = sa * b
        return cls._raw(terms)

    @classmethod
    def from_unipoly(cls, u: UniPoly, var: str = "X") -> "BiPoly":
        if var == "X":
            return cls({(i, 0): c for i, c in enumerate(u.coeffs)})
        if var == "Y":
            return cls({(0, j): c for j, c in enumerate(u.coeffs)})
        raise ValueError("var must be 'X' or 'Y'")

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int | None:
        return max((i + j for i, j in self.terms), default=None)

    @property
    def x_degree(self) -> int | None:
        return max((i for i, _ in self.terms), default=None)

    @property
    def y_degree(self) -> int | None:
        return max((j for _, j in self.terms), default=None)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def _lift(self, other) -> "BiPoly":
        return other if isinstance(other, BiPoly) else BiPoly.const(other)

    def __add__(self, other) -> "BiPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            s = as_rational(other)
            return BiPoly._raw({k: c * s for k, c in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = BiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def swap(self) -> "BiPoly":
        """Exchange X and Y."""
        return BiPoly._raw({(j, i): c for (i, j), c in self.terms.items()})

    def negate_args(self) -> "BiPoly":
        """``p(-X, -Y)``."""
        return BiPoly._raw({(i, j): (-c if (i + j) % 2 else c) for (i, j), c in self.terms.items()})

    def __call__(self, x0, y0) -> Fraction:
        return evaluate(self, x0, y0)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        try:
            return self.terms == BiPoly.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms ordered by (total degree, X-degree), both descending."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            factors = []
            if i:
                factors.append("X" if i == 1 else f"X^{i}")
            if j:
                factors.append("Y" if j == 1 else f"Y^{j}")
            pieces.append((c, "*".join(factors)))
        return _join_terms(pieces)

    __str__ = render

    def __repr__(self) -> str:
        return f"BiPoly({self.render()!r})"


X = BiPoly({(1, 0): 1})
Y = BiPoly({(0, 1): 1})


def evaluate(p: BiPoly, x0, y0) -> Fraction:
    x0, y0 = as_rational(x0), as_rational(y0)
    xs: dict[int, Fraction] = {}
    ys: dict[int, Fraction] = {}
    acc = Fraction(0)
    for (i, j), c in p.terms.items():
        if i not in xs:
            xs[i] = x0**i
        if j not in ys:
            ys[j] = y0**j
        acc += c * xs[i] * ys[j]
    return acc


def binom_poly(form: BiPoly, k: int) -> BiPoly:
    """``form (form - 1) ... (form - k + 1) / k!`` for an affine form in X, Y."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if (form.total_degree or 0) > 1:
        raise ValueError("binom_poly needs a form of total degree at most 1")
    out = BiPoly.const(1)
    for i in range(k):
        out = out * (form - i)
    return out * Fraction(1, factorial(k))


# ---------------------------------------------------------------------------
# GJMS polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def gjms_factor(N: int) -> tuple[int, ...]:
    """Integer coefficients of ``u_N(t) = prod_{i<N} (t + 1 - N + 2i) = 2^N C_N(t)``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    coeffs = [1]
    for i in range(N):
        root_shift = 1 - N + 2 * i
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] += c * root_shift
        coeffs = nxt
    return tuple(coeffs)


def int_poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


@lru_cache(maxsize=64)
def _gjms_poly_cached(N: int) -> BiPoly:
    u = gjms_factor(N)
    return BiPoly.separable(u, u)


def gjms_poly(N: int) -> BiPoly:
    """``P_{2N}(X, Y) = 2^{2N} C_N(X) C_N(Y)``."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    return _gjms_poly_cached(N)


def gjms_factored(N: int) -> BiPoly:
    """The product form of ``P_{2N}`` in ``XY`` and ``X^2 + Y^2``.

    ``N = 2M``: ``prod_{j=1}^M ((XY)^2 - (2j-1)^2 (X^2+Y^2) + (2j-1)^4)``;
    ``N = 2M+1``: ``XY prod_{j=1}^M ((XY)^2 - (2j)^2 (X^2+Y^2) + (2j)^4)``.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    xy = X * Y
    xy2 = xy * xy
    sq = X * X + Y * Y
    M, odd = divmod(N, 2)
    out = xy if odd else BiPoly.const(1)
    for j in range(1, M + 1):
        s = 2 * j if odd else 2 * j - 1
        out = out * (xy2 - sq * (s * s) + s**4)
    return out


class SuffixProductCache:
    """Memoised ``u_I = prod_j u_{I_j}`` keyed on composition suffixes.

    ``u_{(I_1, K)} = u_{I_1} * u_K``; every suffix ``K`` is computed once.
    ``mults`` counts univariate polynomial multiplications performed.
    Lookups and inserts are guarded by a re-entrant lock so a cache can be
    shared between threads.
    """

    def __init__(self) -> None:
        self._store: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._lock = threading.RLock()
        self.mults = 0

    def __len__(self) -> int:
        return len(self._store)

    def factor(self, parts: Sequence[int]) -> tuple[int, ...]:
        parts = tuple(parts)
        if len(parts) == 1:
            return gjms_factor(parts[0])
        hit = self._store.get(parts)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._store.get(parts)
            if hit is not None:
                return hit
            value = int_poly_mul(gjms_factor(parts[0]), self.factor(parts[1:]))
            self.mults += 1
            self._store[parts] = value
            return value

    def clear(self) -> None:
        with self._lock:
            self._store.clear()
            self.mults = 0


_default_cache = SuffixProductCache()


def product_over_composition(I: Iterable[int], cache: SuffixProductCache | None = None) -> BiPoly:
    """``P_{2I} = P_{2I_1} ... P_{2I_r}`` as a BiPoly, via the suffix cache."""
    parts = tuple(I)
    if not parts:
        return BiPoly.const(1)
    u = (cache or _default_cache).factor(parts)
    return BiPoly.separable(u, u)


def product_over_composition_bivariate(I: Iterable[int]) -> BiPoly:
    """Same product by straight BiPoly multiplication; used as a cross-check."""
    out = BiPoly.const(1)
    for part in I:
        out = out * gjms_poly(part)
    return out


def exact_div_linear(p: BiPoly, a: int) -> BiPoly:
    """Exact quotient ``p / (X + 1 - a)``.

    Synthetic division in X with coefficients that are polynomials in Y.
    Raises :class:`DivisibilityError` on a nonzero remainder.
    """
    root = as_rational(a) - 1
    by_x: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in p.terms.items():
        by_x.setdefault(i, {})[j] = c
    if not by_x:
        return BiPoly()
    deg = max(by_x)
    quotient: dict[tuple[int, int], Fraction] = {}
    carry: dict[int, Fraction] = {}
    for i in range(deg, 0, -1):
        row = dict(by_x.get(i, {}))
        for j, c in carry.items():
            row[j] = row.get(j, 0) + root * c
        carry = {j: c for j, c in row.items() if c}
        for j, c in carry.items():
            quotient[(i - 1, j)] = c
    remainder = dict(by_x.get(0, {}))
    for j, c in carry.items():
        remainder[j] = remainder.get(j, 0) + root * c
    remainder = {j: c for j, c in remainder.items() if c}
    if remainder:
        rem = BiPoly({(0, j): c for j, c in remainder.items()})
        raise DivisibilityError(f"X + 1 - ({a}) does not divide the polynomial; remainder {rem.render()}")
    return BiPoly._raw(quotient)
