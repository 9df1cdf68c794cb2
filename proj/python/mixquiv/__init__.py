"""Exact trace invariants of mixed quiver representations."""

from ._core import (
    cycles,
    default_prime,
    eq_t_is_zero,
    generalized_vanishing_is_zero,
    graded_span,
    lemma41_holds,
    set_prime,
    sigma_coeffs,
    sigma_rs_expr,
    trstar,
    verify_invariance,
    verify_sigma_rs,
)

__all__ = [
    "cycles",
    "default_prime",
    "eq_t_is_zero",
    "generalized_vanishing_is_zero",
    "graded_span",
    "lemma41_holds",
    "set_prime",
    "sigma_coeffs",
    "sigma_rs_expr",
    "trstar",
    "verify_invariance",
    "verify_sigma_rs",
]
