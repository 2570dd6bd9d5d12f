"""f-invariants of beta families in the Adams-Novikov 2-line."""

from fractions import Fraction

from . import _core
from ._core import (
    CRITERION_COUNT,
    DEFAULT_SEED,
    beta_representative,
    closed_form_beta,
    eta_r,
    evaluate_manifold,
    f_alpha1_alpha,
    f_beta,
    log_coefficient,
    kervaire_chern_polynomial,
    required_chern_numbers,
    run_suite,
    verify_suites,
)

__all__ = [
    "CRITERION_COUNT",
    "DEFAULT_SEED",
    "beta_representative",
    "closed_form_beta",
    "eta_r",
    "evaluate_manifold",
    "f_alpha1_alpha",
    "f_beta",
    "kervaire_chern_polynomial",
    "log_coefficient",
    "qexp",
    "required_chern_numbers",
    "run_suite",
    "verify_suites",
]


def qexp(form, level, precision=20):
    """q-expansion coefficients as (a, b) Fraction pairs meaning a + b*zeta."""
    return [(Fraction(a), Fraction(b)) for a, b in _core.qexp(form, level, precision)]
