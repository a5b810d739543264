"""Finite-difference identities for univariate polynomials.

The alternating binomial sum lemma and its partial-fraction companion, both
checked exactly. The companion is compared after clearing the denominator
``(X - M)_{M+1} = X (X-1) ... (X-M)``, so no sample points are involved.

When ``deg p = M + 1`` the companion needs a constant correction
``(-1)^(M+1) c_{M+1}/(M+1)``. A plain ``+`` sign fails already at
``M = 0, p = x``, where the left side is 0; ``convention="plus"`` keeps that
variant around for comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .records import CheckRecord, run_check
from .unipoly import UniPoly

__all__ = [
    "UniPoly",
    "binomial_poly",
    "binomial_basis_coeffs",
    "from_binomial_basis",
    "lemma_a1_sides",
    "check_lemma_a1",
    "lemma_a2_sides",
    "check_lemma_a2",
    "correction_sign",
]


def binomial_poly(k: int, var: str = "x") -> UniPoly:
    """``binom(x, k) = x (x-1) ... (x-k+1) / k!``."""
    return UniPoly.from_roots(range(k), Fraction(1, factorial(k)), var)


def binomial_basis_coeffs(p: UniPoly) -> list[Fraction]:
    """Coefficients ``c_k`` with ``p(x) = sum_k c_k binom(x, k)``.

    ``c_k`` is the k-th forward difference of ``p`` at 0. The list has
    ``deg p + 1`` entries (empty for the zero polynomial).
    """
    if p.degree is None:
        return []
    vals = [p(t) for t in range(p.degree + 1)]
    out = []
    while vals:
        out.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return out


def from_binomial_basis(coeffs, var: str = "x") -> UniPoly:
    acc = UniPoly((), var)
    for k, c in enumerate(coeffs):
        acc = acc + binomial_poly(k, var) * c
    return acc


def lemma_a1_sides(p: UniPoly, M: int) -> tuple[Fraction, Fraction]:
    if M < 0:
        raise ValueError("M must be non-negative")
    lhs = sum((Fraction((-1) ** a * comb(M, a)) * p(a) for a in range(M + 1)), Fraction(0))
    cs = binomial_basis_coeffs(p)
    c_M = cs[M] if M < len(cs) else Fraction(0)
    return lhs, (-1) ** M * c_M


def check_lemma_a1(p: UniPoly, M: int) -> CheckRecord:
    return run_check("alt_binomial_sum", {"p": p.render(), "M": M}, lambda: lemma_a1_sides(p, M))


def correction_sign(M: int, convention: str = "resolved") -> int:
    """Sign of the ``c_{M+1}/(M+1)`` term: ``(-1)^(M+1)``, or always ``+1`` for ``"plus"``."""
    if convention == "resolved":
        return -1 if M % 2 == 0 else 1
    if convention == "plus":
        return 1
    raise ValueError(f"unknown convention {convention!r}")


def lemma_a2_sides(p: UniPoly, M: int, convention: str = "resolved") -> tuple[UniPoly, UniPoly]:
    """Both sides multiplied by ``X (X-1) ... (X-M)``, as polynomials in X."""
    if M < 0:
        raise ValueError("M must be non-negative")
    deg = p.degree
    if deg is not None and deg > M + 1:
        raise ValueError(f"deg p = {deg} exceeds M + 1 = {M + 1}")
    cs = binomial_basis_coeffs(p)
    lhs = UniPoly((), "X")
    for b in range(M + 1):
        w = (-1) ** b * comb(M, b) * p(b)
        if w:
            lhs = lhs + UniPoly.from_roots([r for r in range(M + 1) if r != b], w, "X")
    p_X = UniPoly(p.coeffs, "X")
    rhs = p_X * ((-1) ** M * factorial(M))
    c_next = cs[M + 1] if M + 1 < len(cs) else Fraction(0)
    if c_next:
        rhs = rhs + UniPoly.from_roots(range(M + 1), correction_sign(M, convention) * c_next / (M + 1), "X")
    return lhs, rhs


def check_lemma_a2(p: UniPoly, M: int, convention: str = "resolved") -> CheckRecord:
    return run_check(
        "alt_binomial_fraction",
        {"p": p.render(), "M": M},
        lambda: lemma_a2_sides(p, M, convention),
    )

