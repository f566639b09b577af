"""The Bessel polynomial families and conversion into the q-basis.

The base family ``q_n`` has the coefficient of u^k equal to
(-n)_k 2^k / ((-2n)_k k!), is normalized to q_n(0) = 1, and satisfies

    q_{n+1}(u) = q_n(u) + u^2/(4n^2-1) * q_{n-1}(u)
    q_n'(u)    = q_n(u) - u/(2n-1)    * q_{n-1}(u)

for n >= 1.  The monic companion (the reverse family) is
theta_n = (2n)!/(n! 2^n) q_n, and the ordinary family is the
coefficient reversal y_n(u) = u^n theta_n(1/u).

Conversion from the monomial basis to the q-basis is an exact
triangular back-substitution against the leading coefficients
2^k k!/(2k)!; the residual after the constant step must be exactly
zero, which the implementation asserts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .arith import pochhammer
from .polynomials import BiLaurent, UniPoly

__all__ = [
    "bessel_q",
    "reverse_bessel_theta",
    "ordinary_bessel_y",
    "monomial_to_qbasis",
    "qbasis_to_monomial",
]


@lru_cache(maxsize=None)
def bessel_q(n: int) -> UniPoly:
    """Degree-n Bessel polynomial q_n with q_n(0) = 1."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    coeffs = []
    for k in range(n + 1):
        coeffs.append(
            pochhammer(-n, k) * 2**k / (pochhammer(-2 * n, k) * math.factorial(k))
        )
    return UniPoly(coeffs)


def _monic_factor(n: int) -> Fraction:
    # Inverse of q_n's leading coefficient 2^n n!/(2n)!.
    return Fraction(math.factorial(2 * n), math.factorial(n) * 2**n)


@lru_cache(maxsize=None)
def reverse_bessel_theta(n: int) -> UniPoly:
    """Monic multiple theta_n = (2n)!/(n! 2^n) q_n."""
    return bessel_q(n) * _monic_factor(n)


@lru_cache(maxsize=None)
def ordinary_bessel_y(n: int) -> UniPoly:
    """Ordinary Bessel polynomial: u^k coefficient (n+k)!/(2^k k! (n-k)!)."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    coeffs = [
        Fraction(math.factorial(n + k), 2**k * math.factorial(k) * math.factorial(n - k))
        for k in range(n + 1)
    ]
    return UniPoly(coeffs)


def _derivative(p: UniPoly) -> UniPoly:
    # Formal derivative; only needed to exercise the derivative
    # recurrence of the q family, hence not part of the public API.
    return UniPoly([k * c for k, c in enumerate(p.coeffs)][1:])


def monomial_to_qbasis(p: UniPoly) -> tuple[BiLaurent, ...]:
    """Expand ``p`` in the basis {q_0, ..., q_deg(p)} by back-substitution.

    Coefficients of ``p`` may be rationals or ``BiLaurent`` values; the
    returned coefficients are always ``BiLaurent``.  Working from the
    top degree down, each step divides out the q-leading coefficient
    2^d d!/(2d)! and subtracts the matched multiple; the residual left
    after the constant step is asserted to be exactly zero.
    """
    degree = p.degree
    if degree < 0:
        return ()
    out: list[BiLaurent] = [BiLaurent.zero()] * (degree + 1)
    residual = p
    for d in range(degree, -1, -1):
        lead = residual.coefficient(d)
        coeff = _to_bilaurent(lead) * _monic_factor(d)
        out[d] = coeff
        if coeff:
            residual = residual - bessel_q(d) * coeff
    if residual:
        raise AssertionError("back-substitution left a nonzero residual")
    return tuple(out)


def qbasis_to_monomial(coeffs) -> UniPoly:
    """Reconstruct sum_k coeffs[k] * q_k(u) in the monomial basis."""
    total = UniPoly()
    for k, coeff in enumerate(coeffs):
        if coeff:
            total = total + bessel_q(k) * coeff
    return total


def _to_bilaurent(value) -> BiLaurent:
    if isinstance(value, BiLaurent):
        return value
    return BiLaurent.constant(value)
