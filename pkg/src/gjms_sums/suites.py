"""Verification suites: task lists, seeded parameter draws and execution.

A task is ``(check_name, args)``; checks are looked up in :data:`CHECKS` so
tasks pickle cleanly for a process pool. Results are always returned sorted
by check name and parameters, independent of execution order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Sequence

from . import verifier
from .exact_arith import pochhammer
from .finite_diff import UniPoly, check_lemma_a1, check_lemma_a2
from .hypergeom import lemma_a3_check
from .poch_poly import PochPoly
from .records import CheckRecord

Task = tuple[str, tuple]

CHECKS = {
    "msum_closed_form": verifier.check_thm_2_5,
    "msum_xy_symmetry": verifier.check_msum_symmetry,
    "decomposition": verifier.check_decomposition,
    "gjms_factored": verifier.check_gjms_factored,
    "reversal_symmetry": verifier.check_reversal_symmetry,
    "q_sum_identity": verifier.check_thm_3_1,
    "q_curvature": verifier.q_curvature_check,
    "w_relation": verifier.check_w_relation,
    "spectral_eval": verifier.spectral_eval,
    "poch_product": verifier.check_lemma_2_3,
    "partial_sum": verifier.check_lemma_2_4,
    "chu_vandermonde": verifier.check_chu_vandermonde,
    "pfaff_saalschuetz": verifier.check_pfaff_saalschuetz,
    "pfaff_transformation": verifier.check_pfaff_transformation,
    "alt_binomial_sum": check_lemma_a1,
    "alt_binomial_fraction": check_lemma_a2,
    "f32_transform": lemma_a3_check,
}

# per-family trial counts used when no explicit count is given
DEFAULT_TRIALS = {
    "poch_product": 500,
    "chu_vandermonde": 1000,
    "pfaff_saalschuetz": 1000,
    "pfaff_transformation": 200,
    "alt_binomial_sum": 500,
    "alt_binomial_fraction": 500,
    "f32_transform": 200,
}


def _run_task(task: Task) -> CheckRecord:
    name, args = task
    return CHECKS[name](*args)


def execute(tasks: Sequence[Task], parallel: int = 1) -> list[CheckRecord]:
    if parallel > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            records = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * parallel))))
    else:
        records = [_run_task(t) for t in tasks]
    return sorted(records, key=CheckRecord.sort_key)


# ---------------------------------------------------------------------------
# deterministic suites
# ---------------------------------------------------------------------------

def verify_op_tasks(n_max: int, n_min: int = 1, struct_max: int = 12) -> list[Task]:
    tasks: list[Task] = [("msum_closed_form", (N,)) for N in range(n_min, n_max + 1)]
    tasks += [("msum_xy_symmetry", (N,)) for N in range(n_min, n_max + 1)]
    top = min(n_max, struct_max)
    tasks += [("decomposition", (N,)) for N in range(max(n_min, 1), top + 1)]
    tasks += [("gjms_factored", (N,)) for N in range(max(n_min, 1), top + 1)]
    tasks += [("reversal_symmetry", (s,)) for s in range(max(n_min, 1), top + 1)]
    return tasks


def verify_q_tasks(n_max: int, n_min: int = 1) -> list[Task]:
    return [("q_sum_identity", (N,)) for N in range(n_min, n_max + 1)]


def qtable_tasks(qs: Iterable[int], ps: Iterable[int], n_max: int, n_min: int = 1) -> list[Task]:
    tasks: list[Task] = []
    for q in qs:
        for p in ps:
            for N in range(n_min, n_max + 1):
                tasks.append(("q_curvature", (N, q, p)))
                tasks.append(("w_relation", (N, q, p)))
    return tasks


def spectral_tasks(n_max: int, dims: Sequence[tuple[int, int]], degree_max: int = 3) -> list[Task]:
    return [
        ("spectral_eval", (N, q, p, k, l))
        for N in range(1, n_max + 1)
        for q, p in dims
        for k in range(degree_max + 1)
        for l in range(degree_max + 1)
    ]


def lemma_2_4_tasks(n_max: int) -> list[Task]:
    return [("partial_sum", (N, a)) for N in range(2, n_max + 1) for a in range(1, N)]


# ---------------------------------------------------------------------------
# seeded random draws
# ---------------------------------------------------------------------------

def rand_rational(rng: random.Random, span: int = 12, den_max: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den_max))


def _rand_nonzero(rng: random.Random) -> Fraction:
    while True:
        x = rand_rational(rng)
        if x:
            return x


def _denominators_clear(denom: Sequence[Fraction], n: int) -> bool:
    """No denominator Pochhammer vanishes at any index up to ``n``."""
    return all(pochhammer(b, n) != 0 for b in denom)


def rand_unipoly(rng: random.Random, degree: int, var: str = "x") -> UniPoly:
    coeffs = [rand_rational(rng) for _ in range(degree)] + [_rand_nonzero(rng)]
    return UniPoly(coeffs, var)


def rand_pochpoly(rng: random.Random, max_degree: int = 12, max_terms: int = 4) -> PochPoly:
    k = rng.randint(1, max_terms)
    return PochPoly({rng.randint(0, max_degree): _rand_nonzero(rng) for _ in range(k)}, "X")


def draw_chu_vandermonde(rng: random.Random, n_max: int = 20) -> tuple:
    while True:
        n = rng.randint(0, n_max)
        b, c = rand_rational(rng), rand_rational(rng)
        if _denominators_clear([c], n):
            return (b, c, n)


def draw_pfaff_saalschuetz(rng: random.Random, n_max: int = 15) -> tuple:
    while True:
        n = rng.randint(0, n_max)
        a, b, c = rand_rational(rng), rand_rational(rng), rand_rational(rng)
        d = 1 + a + b - c - n
        if _denominators_clear([c, d, c - a - b], n):
            return (a, b, c, n)


def draw_pfaff_transformation(rng: random.Random, n_max: int = 12) -> tuple:
    while True:
        n = rng.randint(0, n_max)
        A, C, z = rand_rational(rng), rand_rational(rng), rand_rational(rng)
        if z != 1 and _denominators_clear([C], n):
            return (A, -n, C, z)


def draw_transform_pair(rng: random.Random) -> tuple[Fraction, Fraction]:
    """``(a, e)`` with ``e`` and ``a - e`` non-integral: every denominator is pole-free."""
    while True:
        a, e = rand_rational(rng), rand_rational(rng)
        if e.denominator != 1 and (a - e).denominator != 1:
            return a, e


def draw_alt_fraction(rng: random.Random, m_max: int = 12) -> tuple:
    M = rng.randint(0, m_max)
    deg = M + 1 if rng.random() < 0.5 else rng.randint(0, M)
    return (rand_unipoly(rng, deg), M)


def _n(trials: int | None, family: str) -> int:
    return DEFAULT_TRIALS[family] if trials is None else trials


def lemma_tasks(trials: int | None = None, seed: int = 42, n_max: int = 12, a3_n_max: int = 10) -> list[Task]:
    """Every lemma and classical-summation check, parameters drawn from ``seed``."""
    rng = random.Random(seed)
    tasks: list[Task] = []
    # basis products: full grid, then random sparse pairs
    for A in range(13):
        for B in range(13):
            tasks.append(("poch_product", (PochPoly({A: 1}), PochPoly({B: 1}))))
    for _ in range(_n(trials, "poch_product")):
        tasks.append(("poch_product", (rand_pochpoly(rng), rand_pochpoly(rng))))
    tasks += lemma_2_4_tasks(n_max)
    for _ in range(_n(trials, "chu_vandermonde")):
        tasks.append(("chu_vandermonde", draw_chu_vandermonde(rng)))
    for _ in range(_n(trials, "pfaff_saalschuetz")):
        tasks.append(("pfaff_saalschuetz", draw_pfaff_saalschuetz(rng)))
    for _ in range(_n(trials, "pfaff_transformation")):
        tasks.append(("pfaff_transformation", draw_pfaff_transformation(rng)))
    for _ in range(_n(trials, "alt_binomial_sum")):
        tasks.append(("alt_binomial_sum", (rand_unipoly(rng, rng.randint(0, 12)), rng.randint(0, 12))))
    for _ in range(_n(trials, "alt_binomial_fraction")):
        tasks.append(("alt_binomial_fraction", draw_alt_fraction(rng)))
    for _ in range(_n(trials, "f32_transform")):
        a, e = draw_transform_pair(rng)
        tasks += [("f32_transform", (a, e, N)) for N in range(a3_n_max + 1)]
    return tasks

