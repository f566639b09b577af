"""Exact linearization coefficients of Bessel polynomial products.

The package expands q_n(a1*u) * q_m(a2*u) in the Bessel basis
{q_k(u)} by three independent exact engines, and machine-verifies the
recurrences, specializations and hypergeometric reductions those
coefficients satisfy.  Everything is arbitrary-precision rational
arithmetic; no value is ever approximated.
"""

from .arith import PoleError, Rational, binomial, gamma_ratio, pochhammer
from .bessel import (
    bessel_q,
    monomial_to_qbasis,
    ordinary_bessel_y,
    qbasis_to_monomial,
    reverse_bessel_theta,
)
from .hypergeom import (
    SYMBOLIC,
    DomainError,
    HSeries,
    LowerParameterPole,
    NonTerminatingSeries,
    eval_terminating,
    eval_weighted,
    reduction_2f1_lower,
    reduction_2f1_upper,
    reduction_3f2_sum,
    reduction_branches,
)
from .linearization import (
    ENGINES,
    IdentityViolation,
    LinTable,
    PositivityViolation,
    berg_vignat_check,
    berg_vignat_substitute,
    coefficient_closed_form,
    coefficient_hypergeometric,
    ensure_all_pass,
    linearize,
    linearize_closed_form,
    linearize_hypergeometric,
    linearize_oracle,
    verify_shift_recurrences,
)
from .polynomials import (
    BiLaurent,
    NotPolynomialError,
    UniPoly,
    a1,
    a2,
    assert_polynomial,
)
from .report import CheckRecord, summarize
from .suites import run_suite

__all__ = [
    "Rational",
    "PoleError",
    "pochhammer",
    "binomial",
    "gamma_ratio",
    "BiLaurent",
    "UniPoly",
    "NotPolynomialError",
    "assert_polynomial",
    "a1",
    "a2",
    "bessel_q",
    "reverse_bessel_theta",
    "ordinary_bessel_y",
    "monomial_to_qbasis",
    "qbasis_to_monomial",
    "HSeries",
    "SYMBOLIC",
    "LowerParameterPole",
    "NonTerminatingSeries",
    "DomainError",
    "eval_terminating",
    "eval_weighted",
    "reduction_branches",
    "reduction_2f1_upper",
    "reduction_2f1_lower",
    "reduction_3f2_sum",
    "LinTable",
    "ENGINES",
    "linearize",
    "linearize_oracle",
    "linearize_closed_form",
    "linearize_hypergeometric",
    "coefficient_closed_form",
    "coefficient_hypergeometric",
    "verify_shift_recurrences",
    "berg_vignat_check",
    "berg_vignat_substitute",
    "IdentityViolation",
    "PositivityViolation",
    "ensure_all_pass",
    "CheckRecord",
    "summarize",
    "run_suite",
]
