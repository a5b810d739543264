"""Composition sums of GJMS polynomials and the checks built on them.

All objects are exact BiPolys or Fractions; a check passes only on exact
equality. Evaluation points on ``S^q x S^p`` use ``X = c + b``, ``Y = c - b``
with ``b``, ``c`` the square roots of the shifted sphere Laplacians.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .compositions import Composition, enumerate_compositions, multiplicity_parts
from .exact_arith import as_rational, gen_binomial, pochhammer
from .hypergeom import chu_vandermonde, hyp, pfaff_saalschuetz, pfaff_transformation_sides
from .poch_poly import (
    BiPoly,
    DivisibilityError,
    PochPoly,
    SuffixProductCache,
    X,
    Y,
    binom_poly,
    centered_poch_monomial,
    evaluate,
    exact_div_linear,
    gjms_factor,
    gjms_factored,
    gjms_poly,
    int_poly_mul,
    mul_poch,
    product_over_composition,
    product_over_composition_bivariate,
    to_monomial,
)
from .records import FAIL, CheckRecord, run_check

__all__ = [
    "MSumStats",
    "m_sum",
    "m_sum_with_stats",
    "msum_closed_form_rhs",
    "check_thm_2_5",
    "partial_sum_bruteforce",
    "partial_sum_closed",
    "check_lemma_2_4",
    "check_decomposition",
    "q_sum_poly",
    "thm_3_1_rhs",
    "check_thm_3_1",
    "q_curvature_rhs",
    "q_curvature_pointwise",
    "q_curvature_check",
    "vw_coeffs",
    "check_w_relation",
    "spectral_point",
    "spectral_eval",
    "check_gjms_factored",
    "check_reversal_symmetry",
    "check_msum_symmetry",
    "check_product_routes",
    "check_vw_square",
    "check_lemma_2_3",
    "check_chu_vandermonde",
    "check_pfaff_saalschuetz",
    "check_pfaff_transformation",
]

STRATEGIES = ("memo", "naive", "bivariate")


# ---------------------------------------------------------------------------
# M_{2N} = sum_{|I|=N} m_I P_{2I}
# ---------------------------------------------------------------------------

@dataclass
class MSumStats:
    N: int
    strategy: str
    terms: int = 0
    mults: int = 0
    seconds: float = 0.0
    peak_bits: int = 0


def _bits(x: Fraction) -> int:
    return max(abs(x.numerator).bit_length(), x.denominator.bit_length())


def _collect(groups: dict[tuple[int, ...], Fraction]) -> BiPoly:
    """``sum_u w_u * u(X) u(Y)`` over grouped univariate factors."""
    out: dict[tuple[int, int], Fraction] = {}
    for u, w in groups.items():
        if not w:
            continue
        for i, a in enumerate(u):
            if a:
                wa = w * a
                for j, b in enumerate(u):
                    if b:
                        key = (i, j)
                        out[key] = out.get(key, 0) + wa * b
    return BiPoly(out)


def _msum_memo(N: int, stats: MSumStats) -> dict[tuple[int, ...], Fraction]:
    # Walk the tree of composition suffixes from the back: each node is one
    # suffix K, its product u_K is computed once from u_{K[1:]} and shared by
    # every composition ending in K. The DFS stack holds the live suffixes.
    scale = factorial(N) * factorial(N - 1)
    groups: dict[tuple[int, ...], Fraction] = {}
    mults = 0
    terms = 0

    def visit(remaining: int, u: tuple[int, ...], first: int, den: int, r: int) -> None:
        nonlocal mults, terms
        if remaining == 0:
            terms += 1
            num = scale if r % 2 else -scale
            groups[u] = groups.get(u, 0) + Fraction(num, den)
            return
        for a in range(1, remaining + 1):
            fa = gjms_factor(a)
            if r:
                nu = int_poly_mul(fa, u)
                mults += 1
                nden = den * factorial(a) * factorial(a - 1) * (a + first)
            else:
                nu = fa
                nden = factorial(a) * factorial(a - 1)
            visit(remaining - a, nu, a, nden, r + 1)

    visit(N, (1,), 0, 1, 0)
    stats.mults = mults
    stats.terms = terms
    return groups


def _msum_naive(N: int, stats: MSumStats) -> dict[tuple[int, ...], Fraction]:
    groups: dict[tuple[int, ...], Fraction] = {}
    for I in enumerate_compositions(N):
        u = gjms_factor(I[0])
        for part in I[1:]:
            u = int_poly_mul(u, gjms_factor(part))
            stats.mults += 1
        stats.terms += 1
        groups[u] = groups.get(u, 0) + multiplicity_parts(I)
    return groups


def m_sum_with_stats(N: int, strategy: str = "memo") -> tuple[BiPoly, MSumStats]:
    """Compute ``M_{2N}`` and report term count, multiplications and timing.

    ``memo`` shares suffix products, ``naive`` rebuilds each product from its
    parts, ``bivariate`` multiplies full BiPolys (slow; for cross-checks).
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    stats = MSumStats(N, strategy)
    t0 = time.perf_counter()
    if strategy == "bivariate":
        acc = BiPoly()
        for I in enumerate_compositions(N):
            acc = acc + product_over_composition_bivariate(I) * multiplicity_parts(I)
            stats.terms += 1
            stats.mults += len(I) - 1
        result = acc
        groups = {}
    else:
        groups = _msum_memo(N, stats) if strategy == "memo" else _msum_naive(N, stats)
        result = _collect(groups)
    stats.seconds = time.perf_counter() - t0
    peak = 0
    for u, w in groups.items():
        peak = max(peak, _bits(w), max(abs(c).bit_length() for c in u))
    for c in result.terms.values():
        peak = max(peak, _bits(c))
    stats.peak_bits = peak
    return result, stats


@lru_cache(maxsize=None)
def m_sum(N: int) -> BiPoly:
    """``sum_{|I|=N} m_I P_{2I}`` using memoised suffix products."""
    return m_sum_with_stats(N, "memo")[0]


def thm_2_5_rhs(N: int) -> BiPoly:
    scale = factorial(N) * factorial(N - 1)
    if N % 2:
        return X * Y * scale
    return (1 - X * X - Y * Y) * Fraction(scale, 2)


def check_thm_2_5(N: int) -> CheckRecord:
    return run_check("msum_closed_form", {"N": N}, lambda: (m_sum(N), thm_2_5_rhs(N)))


def check_msum_symmetry(N: int) -> CheckRecord:
    """``M_{2N}`` is unchanged by exchanging X and Y."""
    return run_check("msum_xy_symmetry", {"N": N}, lambda: (m_sum(N), m_sum(N).swap()))


# ---------------------------------------------------------------------------
# Partial sums S(N, a)
# ---------------------------------------------------------------------------

def _check_partial_range(N: int, a: int) -> None:
    if not (isinstance(N, int) and isinstance(a, int) and 1 <= a < N):
        raise ValueError(f"need 1 <= a < N, got N={N}, a={a}")


@lru_cache(maxsize=None)
def partial_sum_bruteforce(N: int, a: int) -> BiPoly:
    """``S(N, a) = sum_{|J| = N - a} m_{(J, a)} P_{2J}``."""
    _check_partial_range(N, a)
    groups: dict[tuple[int, ...], Fraction] = {}
    cache = SuffixProductCache()
    for J in enumerate_compositions(N - a):
        u = cache.factor(J)
        groups[u] = groups.get(u, 0) + multiplicity_parts(tuple(J) + (a,))
    return _collect(groups)


def _f43(N: int, a: int, k: int, l: int) -> Fraction:
    numer = [Fraction(-1, 2), -k, -l, Fraction(1 - N, 2)]
    denom = [Fraction(-N, 2), Fraction(a - N, 2), Fraction(1 + a - N, 2)]
    # a zero denominator Pochhammer here would mean the closed form is ill-posed
    limit = min(k, l)
    for b in denom:
        if b.denominator == 1 and b <= 0 and -b < limit:
            raise AssertionError(f"4F3 pole within summation range: N={N}, a={a}, k={k}, l={l}, b={b}")
    return hyp(numer, denom, 1)


def partial_sum_closed(N: int, a: int) -> BiPoly:
    """Closed double-sum form of ``S(N, a)`` in the centered Pochhammer basis."""
    _check_partial_range(N, a)
    d = N - a
    half_N = Fraction(-N, 2)
    out = BiPoly()
    for k in range(d // 2 + 1):
        ck = pochhammer(-d, 2 * k) * pochhammer(half_N, k) / factorial(k)
        for l in range(d // 2 + 1):
            cl = pochhammer(-d, 2 * l) * pochhammer(half_N, l) / factorial(l)
            sign = -1 if (N + k + l + a) % 2 else 1
            coeff = comb(N - 1, a - 1) * sign * Fraction(2) ** (2 * N - 2 * k - 2 * l - 2 * a) * ck * cl
            coeff *= _f43(N, a, k, l)
            if coeff:
                out = out + BiPoly.separable(
                    centered_poch_monomial(d - 2 * k), centered_poch_monomial(d - 2 * l), coeff
                )
    return out


def check_lemma_2_4(N: int, a: int) -> CheckRecord:
    return run_check(
        "partial_sum", {"N": N, "a": a}, lambda: (partial_sum_bruteforce(N, a), partial_sum_closed(N, a))
    )


def check_decomposition(N: int) -> CheckRecord:
    """``M_{2N} = P_{2N} + sum_{a<N} S(N, a) P_{2a}``."""

    def sides():
        rhs = gjms_poly(N)
        for a in range(1, N):
            rhs = rhs + partial_sum_bruteforce(N, a) * gjms_poly(a)
        return m_sum(N), rhs

    return run_check("decomposition", {"N": N}, sides)


# ---------------------------------------------------------------------------
# Q-sum polynomial and Q-curvature
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_sum_poly(N: int) -> BiPoly:
    """``sum_{|I|=N} m_I P_{2I} / (X + 1 - I_last)``.

    Every term is divided exactly; a nonzero remainder raises
    :class:`DivisibilityError`.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    cache = SuffixProductCache()
    out = BiPoly()
    for I in enumerate_compositions(N):
        term = exact_div_linear(product_over_composition(I, cache), I.last)
        out = out + term * multiplicity_parts(I)
    return out


def thm_3_1_rhs(N: int) -> BiPoly:
    minus = (X - Y + 1) * Fraction(1, 2)
    plus = (X + Y + 1) * Fraction(1, 2)
    acc = BiPoly()
    for k in range(N + 1):
        term = binom_poly(minus, k) * binom_poly(plus, N - k)
        acc = acc + (term if k % 2 == 0 else -term)
    return acc * (factorial(N) * factorial(N - 1))


def check_thm_3_1(N: int) -> CheckRecord:
    try:
        return run_check("q_sum_identity", {"N": N}, lambda: (q_sum_poly(N), thm_3_1_rhs(N)))
    except DivisibilityError as exc:
        return CheckRecord("q_sum_identity", {"N": N}, FAIL, reason=f"divisibility violated: {exc}")


def _check_dims(q: int, p: int) -> None:
    for name, v in (("q", q), ("p", p)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")


def q_curvature_rhs(N: int, q: int, p: int) -> Fraction:
    """``N! (N-1)! sum_M (-1)^M binom(q/2, M) binom(p/2, N-M)``."""
    hq, hp = Fraction(q, 2), Fraction(p, 2)
    s = sum(
        ((-1) ** M * gen_binomial(hq, M) * gen_binomial(hp, N - M) for M in range(N + 1)),
        Fraction(0),
    )
    return factorial(N) * factorial(N - 1) * s


def q_curvature_point(q: int, p: int) -> tuple[Fraction, Fraction]:
    """``(X, Y)`` acting on constants: ``(n/2 - 1, (p - q)/2)``."""
    return Fraction(q + p, 2) - 1, Fraction(p - q, 2)


def q_curvature_pointwise(N: int, q: int, p: int) -> Fraction | None:
    """Direct scalar sum ``sum m_I P_{2I}(1) / (n/2 - I_last)``.

    Returns ``None`` when some ``I_last`` equals ``n/2`` (the quotient is then
    only defined through the polynomial identity).
    """
    _check_dims(q, p)
    x0, y0 = q_curvature_point(q, p)
    half_n = Fraction(q + p, 2)
    if half_n.denominator == 1 and 1 <= half_n <= N:
        return None
    vals = {a: evaluate(gjms_poly(a), x0, y0) for a in range(1, N + 1)}
    total = Fraction(0)
    for I in enumerate_compositions(N):
        prod = Fraction(1)
        for part in I:
            prod *= vals[part]
        total += multiplicity_parts(I) * prod / (half_n - I.last)
    return total


def q_curvature_check(N: int, q: int, p: int) -> CheckRecord:
    _check_dims(q, p)
    x0, y0 = q_curvature_point(q, p)
    return run_check(
        "q_curvature",
        {"N": N, "q": q, "p": p},
        lambda: (evaluate(q_sum_poly(N), x0, y0), q_curvature_rhs(N, q, p)),
    )


def vw_coeffs(q: int, p: int, order: int) -> tuple[list[Fraction], list[Fraction]]:
    """Taylor coefficients in ``r^2`` of ``v = (1-r^2/4)^q (1+r^2/4)^p`` and ``w = sqrt(v)``.

    Entry ``k`` of each list is the coefficient of ``r^(2k)``, for ``k <= order``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    quarter = Fraction(1, 4)

    def series(alpha, beta):
        return [
            sum(
                (gen_binomial(alpha, i) * (-quarter) ** i * gen_binomial(beta, k - i) * quarter ** (k - i)
                 for i in range(k + 1)),
                Fraction(0),
            )
            for k in range(order + 1)
        ]

    return series(q, p), series(Fraction(q, 2), Fraction(p, 2))


def check_w_relation(N: int, q: int, p: int) -> CheckRecord:
    def sides():
        _, w = vw_coeffs(q, p, N)
        return q_curvature_rhs(N, q, p), factorial(N) * factorial(N - 1) * 4**N * w[N]

    return run_check("w_relation", {"N": N, "q": q, "p": p}, sides)


def check_vw_square(q: int, p: int, order: int) -> CheckRecord:
    """``(sum w_2k r^2k)^2 = sum v_2k r^2k`` through ``r^(2 order)``."""

    def sides():
        v, w = vw_coeffs(q, p, order)
        sq = [sum((w[i] * w[k - i] for i in range(k + 1)), Fraction(0)) for k in range(order + 1)]
        return tuple(sq), tuple(v)

    return run_check("vw_square", {"q": q, "p": p, "order": order}, sides)


# ---------------------------------------------------------------------------
# Spectral evaluation
# ---------------------------------------------------------------------------

def spectral_point(q: int, p: int, k: int, l: int) -> tuple[Fraction, Fraction]:
    """``(X, Y)`` on the joint eigenspace of degree ``k`` on ``S^q`` and ``l`` on ``S^p``."""
    b = k + Fraction(q - 1, 2)
    c = l + Fraction(p - 1, 2)
    return c + b, c - b


def spectral_eval(N: int, q: int, p: int, k: int, l: int) -> CheckRecord:
    """Evaluate ``M_{2N}`` on an eigenspace and compare with the B^2, C^2 form.

    ``B^2 = k(k+q-1) + ((q-1)/2)^2`` and likewise ``C^2``; the expected value
    is ``N!(N-1)! (C^2 - B^2)`` for odd ``N`` and ``N!(N-1)! (1/2 - B^2 - C^2)``
    for even ``N``.
    """
    _check_dims(q, p)
    x0, y0 = spectral_point(q, p, k, l)
    B2 = k * (k + q - 1) + Fraction(q - 1, 2) ** 2
    C2 = l * (l + p - 1) + Fraction(p - 1, 2) ** 2
    scale = factorial(N) * factorial(N - 1)
    expected = scale * (C2 - B2) if N % 2 else scale * (Fraction(1, 2) - B2 - C2)
    return run_check(
        "spectral_eval",
        {"N": N, "q": q, "p": p, "k": k, "l": l},
        lambda: (evaluate(m_sum(N), x0, y0), expected),
    )


# ---------------------------------------------------------------------------
# Structural cross-checks
# ---------------------------------------------------------------------------

def check_gjms_factored(N: int) -> CheckRecord:
    return run_check("gjms_factored", {"N": N}, lambda: (gjms_poly(N), gjms_factored(N)))


def check_reversal_symmetry(size: int) -> CheckRecord:
    """``m_I = m_{reverse(I)}`` for every composition of ``size``."""

    def sides():
        comps = list(enumerate_compositions(size))
        fwd = tuple(multiplicity_parts(I) for I in comps)
        rev = tuple(multiplicity_parts(I[::-1]) for I in comps)
        return fwd, rev

    return run_check("reversal_symmetry", {"size": size}, sides)


def check_product_routes(I) -> CheckRecord:
    """Suffix-cached separable product against straight BiPoly multiplication."""
    I = Composition(I)
    return run_check(
        "product_routes",
        {"I": "(" + ",".join(map(str, I)) + ")"},
        lambda: (product_over_composition(I), product_over_composition_bivariate(I)),
    )


# ---------------------------------------------------------------------------
# basis products and the classical summations
# ---------------------------------------------------------------------------

def check_lemma_2_3(p: PochPoly, q: PochPoly) -> CheckRecord:
    """Pochhammer-basis product against the monomial-basis product."""
    return run_check(
        "poch_product",
        {"p": p.render(), "q": q.render()},
        lambda: (to_monomial(mul_poch(p, q)), to_monomial(p) * to_monomial(q)),
    )


def check_chu_vandermonde(b, c, n: int) -> CheckRecord:
    return run_check(
        "chu_vandermonde",
        {"b": as_rational(b), "c": as_rational(c), "n": n},
        lambda: (hyp([-n, b], [c], 1), chu_vandermonde(b, c, n)),
    )


def check_pfaff_saalschuetz(a, b, c, n: int) -> CheckRecord:
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    return run_check(
        "pfaff_saalschuetz",
        {"a": a, "b": b, "c": c, "n": n},
        lambda: (hyp([a, b, -n], [c, 1 + a + b - c - n], 1), pfaff_saalschuetz(a, b, c, n)),
    )


def check_pfaff_transformation(A, B, C, z) -> CheckRecord:
    A, B, C, z = (as_rational(v) for v in (A, B, C, z))
    return run_check(
        "pfaff_transformation",
        {"A": A, "B": B, "C": C, "z": z},
        lambda: pfaff_transformation_sides(A, B, C, z),
    )
