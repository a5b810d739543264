"""Exact GJMS composition sums on S^q x S^p and their verification."""

from .compositions import Composition, enumerate_compositions, multiplicity
from .exact_arith import Rational, c_N, factorial_like, gen_binomial, pochhammer
from .poch_poly import (
    BiPoly,
    DivisibilityError,
    PochPoly,
    X,
    Y,
    binom_poly,
    centered_poch,
    evaluate,
    exact_div_linear,
    from_monomial,
    gjms_factored,
    gjms_poly,
    mul_poch,
    product_over_composition,
    to_monomial,
)
from .records import CheckRecord
from .verifier import (
    check_thm_2_5,
    check_thm_3_1,
    m_sum,
    partial_sum_bruteforce,
    partial_sum_closed,
    q_curvature_check,
    q_sum_poly,
)

__version__ = "0.1.0"
