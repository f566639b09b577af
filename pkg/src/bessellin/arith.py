"""Exact rational scalar arithmetic and combinatorial primitives.

Everything downstream (polynomial rings, series summation, identity
checks) is built from the three primitives here: rising factorials,
binomial coefficients and gamma-function ratios.  All values are exact
``fractions.Fraction`` instances; no irrational constant is ever
represented.  Half-integer gamma expressions only occur as ratios whose
square-root factors cancel, so a gamma ratio is always a finite product
of rational factors.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Rational",
    "PoleError",
    "pochhammer",
    "binomial",
    "gamma_ratio",
]

# The universal exact scalar: arbitrary-precision, always stored reduced
# with a positive denominator.
Rational = Fraction


class PoleError(ArithmeticError):
    """A gamma ratio was requested at a point where it is infinite."""


def _as_fraction(z) -> Fraction:
    if isinstance(z, Fraction):
        return z
    if isinstance(z, int):
        return Fraction(z)
    raise TypeError(f"expected an exact rational, got {type(z).__name__}")


@lru_cache(maxsize=None)
def _pochhammer_cached(z: Fraction, n: int) -> Fraction:
    acc = Fraction(1)
    for j in range(n):
        acc *= z + j
    return acc


def pochhammer(z, n: int) -> Fraction:
    """Rising factorial (z)_n = z (z+1) ... (z+n-1); the empty product is 1.

    ``z`` may be any exact rational, including nonpositive integers (in
    which case the product can legitimately be zero).  ``n`` must be a
    nonnegative integer.
    """
    if n < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {n}")
    z = _as_fraction(z)
    # Integer bases with the zero factor inside the range short-circuit;
    # this also keeps the cache free of large dead products.
    if z.denominator == 1 and z <= 0 and n >= 1 - z:
        return Fraction(0)
    return _pochhammer_cached(z, n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k is outside 0..n."""
    if n < 0:
        raise ValueError(f"binomial row must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gamma_ratio(a, b, denominator_pole_is_zero: bool = False) -> Fraction:
    """Gamma(a)/Gamma(b) for exact rationals with an integer difference.

    The ratio is evaluated purely as a Pochhammer product: (b)_{a-b}
    when a >= b, and 1/(a)_{b-a} otherwise.  For integer arguments this
    product form realizes the shared-shift limit
    Gamma(a+eps)/Gamma(b+eps) as eps -> 0, so a pole of Gamma(a) paired
    against a pole of Gamma(b) resolves to the finite value
    (-1)^(p+q) q!/p! (with a = -p, b = -q).

    Unpaired poles are handled strictly:

    * Gamma(a) at a pole while Gamma(b) is finite makes the ratio
      genuinely infinite and raises :class:`PoleError`.
    * Gamma(b) at a pole while Gamma(a) is finite makes the ratio zero
      only under the "reciprocal gamma at nonpositive integers is zero"
      convention; that convention must be opted into via
      ``denominator_pole_is_zero=True``, otherwise :class:`PoleError`
      is raised.
    """
    a = _as_fraction(a)
    b = _as_fraction(b)
    shift = a - b
    if shift.denominator != 1:
        raise ValueError(f"gamma_ratio needs an integer difference, got {a} - {b}")
    n = shift.numerator
    if n >= 0:
        value = pochhammer(b, n)
        if value == 0:
            # Zero factor <=> Gamma(b) poles while Gamma(a) does not.
            if denominator_pole_is_zero:
                return Fraction(0)
            raise PoleError(
                f"Gamma({b}) is at a pole; the zero-ratio convention "
                "requires denominator_pole_is_zero=True"
            )
        return value
    value = pochhammer(a, -n)
    if value == 0:
        raise PoleError(f"Gamma({a})/Gamma({b}) is infinite")
    return 1 / value
