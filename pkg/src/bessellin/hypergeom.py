"""Exact evaluation of terminating hypergeometric series.

A series pFq(upper; lower; x) terminates when some upper parameter is a
nonpositive integer; the termination index T is the smallest such -p.
Terminating series are finite sums of exact rationals, so every
evaluation here is exact: either a rational number, or (for a symbolic
argument) the degree-T polynomial in the argument symbol.

This module also evaluates both sides of the reduction identity that
collapses a weighted sum of 3F2 values into a single 2F1: the
:func:`reduction_3f2_sum` right-hand side, and the two 2F1 left-hand
sides, one per index branch.  All gamma content goes through
:func:`bessellin.arith.gamma_ratio`, so poles are resolved by the
shared-shift pairwise limit and never numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import gamma_ratio, binomial, pochhammer
from .polynomials import UniPoly

__all__ = [
    "SYMBOLIC",
    "HSeries",
    "LowerParameterPole",
    "NonTerminatingSeries",
    "DomainError",
    "eval_terminating",
    "eval_weighted",
    "reduction_branches",
    "reduction_2f1_upper",
    "reduction_2f1_lower",
    "reduction_3f2_sum",
]


class _SymbolicArgument:
    """Marker: evaluate the series as a polynomial in its argument."""

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "SYMBOLIC"


SYMBOLIC = _SymbolicArgument()


class LowerParameterPole(ArithmeticError):
    """Some (lower)_j vanishes at j <= T: the series is ill-defined as written."""

    def __init__(self, parameter: Fraction, term_index: int):
        self.parameter = parameter
        self.term_index = term_index
        super().__init__(
            f"lower parameter {parameter} makes term {term_index} divide by zero"
        )


class NonTerminatingSeries(ValueError):
    """No upper parameter is a nonpositive integer."""


class DomainError(ValueError):
    """Arguments fall outside the validity range of a reduction branch."""


@dataclass(frozen=True)
class HSeries:
    """A terminating generalized hypergeometric series specification."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction | _SymbolicArgument

    def __init__(self, upper, lower, argument):
        object.__setattr__(self, "upper", tuple(Fraction(u) for u in upper))
        object.__setattr__(self, "lower", tuple(Fraction(v) for v in lower))
        if not isinstance(argument, _SymbolicArgument):
            argument = Fraction(argument)
        object.__setattr__(self, "argument", argument)
        self.termination_index  # validate the witness on construction

    @property
    def termination_index(self) -> int:
        """Smallest -p over nonpositive-integer upper parameters."""
        witnesses = [
            -int(u) for u in self.upper if u.denominator == 1 and u <= 0
        ]
        if not witnesses:
            raise NonTerminatingSeries(f"no nonpositive-integer upper parameter in {self.upper}")
        return min(witnesses)


def eval_terminating(series: HSeries) -> Fraction | UniPoly:
    """Sum the terminating series exactly.

    Returns a rational for a rational argument, or the degree-T
    polynomial (as :class:`UniPoly` in the argument symbol) for a
    symbolic one.  Raises :class:`LowerParameterPole` if any lower
    Pochhammer (lower)_j vanishes for j <= T.
    """
    T = series.termination_index
    for v in series.lower:
        if v.denominator == 1 and v <= 0 and 1 - v <= T:
            raise LowerParameterPole(v, int(1 - v))
    coeffs = []
    for j in range(T + 1):
        num = Fraction(1)
        for u in series.upper:
            num *= pochhammer(u, j)
        den = Fraction(math.factorial(j))
        for v in series.lower:
            den *= pochhammer(v, j)
        coeffs.append(num / den)
    if isinstance(series.argument, _SymbolicArgument):
        return UniPoly(coeffs)
    x = series.argument
    total = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        total += c * power
        power *= x
    return total


def eval_weighted(series: HSeries, weight_index: int, weight_length: int) -> Fraction | UniPoly:
    """Evaluate (lower[weight_index])_{weight_length} * series, fused.

    With c = lower[weight_index] the fused term uses the identity
    (c)_N / (c)_j = (c+j)_{N-j} (valid for j <= N), so the product stays
    finite even where c is a nonpositive integer whose bare series has a
    lower-parameter pole: the weight's zero absorbs it.  This is exactly
    the limit value of weight * series under a common shift of c, and it
    equals the plain product whenever the bare series is well defined.

    Requires weight_length >= T.
    """
    T = series.termination_index
    if weight_length < T:
        raise ValueError(
            f"weight length {weight_length} is shorter than termination index {T}"
        )
    c = series.lower[weight_index]
    others = [v for i, v in enumerate(series.lower) if i != weight_index]
    coeffs = []
    for j in range(T + 1):
        num = Fraction(1)
        for u in series.upper:
            num *= pochhammer(u, j)
        num *= pochhammer(c + j, weight_length - j)
        den = Fraction(math.factorial(j))
        for v in others:
            poch = pochhammer(v, j)
            if poch == 0:
                raise LowerParameterPole(v, j)
            den *= poch
        coeffs.append(num / den)
    if isinstance(series.argument, _SymbolicArgument):
        return UniPoly(coeffs)
    x = series.argument
    total = Fraction(0)
    power = Fraction(1)
    for coeff in coeffs:
        total += coeff * power
        power *= x
    return total


def reduction_branches(n: int, m: int, k: int) -> tuple[str, ...]:
    """Which side(s) of the reduction identity claim index k.

    The upper branch covers k >= ceil((n+m-1)/2) and the lower branch
    k <= floor((n+m-1)/2); when n+m-1 is even both claim the midpoint.
    """
    branches = []
    if k <= (n + m - 1) // 2:
        branches.append("lower")
    if k >= -((-(n + m - 1)) // 2):
        branches.append("upper")
    return tuple(branches)


def _check_point(a: Fraction) -> Fraction:
    a = Fraction(a)
    if a == 0 or a == 1:
        raise DomainError("the reduction identity is evaluated away from a in {0, 1}")
    return a


def reduction_2f1_upper(n: int, m: int, k: int, a) -> Fraction:
    """Single-2F1 side of the reduction identity, branch k >= ceil((n+m-1)/2):

        a^(2n+2m-2k) (1-a)^(k-m-n) Gamma(n+m+2)/Gamma(2k-n-m+2)
            * 2F1(k-m+1, 2k-2n-2m; 2k-n-m+2; 1/a)
    """
    a = _check_point(a)
    if 2 * k < n + m - 1:
        raise DomainError(f"k={k} is below the upper branch of the ({n},{m}) split")
    prefactor = a ** (2 * n + 2 * m - 2 * k) * (1 - a) ** (k - m - n)
    prefactor *= gamma_ratio(n + m + 2, 2 * k - n - m + 2)
    series = HSeries(
        upper=(k - m + 1, 2 * k - 2 * n - 2 * m),
        lower=(2 * k - n - m + 2,),
        argument=1 / a,
    )
    return prefactor * eval_terminating(series)


def reduction_2f1_lower(n: int, m: int, k: int, a) -> Fraction:
    """Single-2F1 side of the reduction identity, branch k <= floor((n+m-1)/2):

        (-a)^(n+m+1) (1-a)^(k-m-n)
            * Gamma(2n+2m-2k+1) Gamma(n-k) / (Gamma(n+m-2k) Gamma(k-m+1))
            * 2F1(n-k, -n-m-1; n+m-2k; 1/a)

    Gamma(n-k)/Gamma(k-m+1) is resolved by the pairwise shared-shift
    limit; an unpaired pole of Gamma(k-m+1) sends the whole side to
    zero via the reciprocal-gamma convention flag.
    """
    a = _check_point(a)
    if 2 * k > n + m - 1:
        raise DomainError(f"k={k} is above the lower branch of the ({n},{m}) split")
    factor = gamma_ratio(n - k, k - m + 1, denominator_pole_is_zero=True)
    if factor == 0:
        return Fraction(0)
    prefactor = (-a) ** (n + m + 1) * (1 - a) ** (k - m - n)
    prefactor *= gamma_ratio(2 * n + 2 * m - 2 * k + 1, n + m - 2 * k)
    series = HSeries(
        upper=(n - k, -n - m - 1),
        lower=(n + m - 2 * k,),
        argument=1 / a,
    )
    return prefactor * factor * eval_terminating(series)


def reduction_3f2_sum(n: int, m: int, k: int, a) -> Fraction:
    """Weighted 3F2 sum side of the reduction identity:

        sum_{i=0}^{m+n-k} a^i C(m+n-k, m+n-k-i) (k-m+i+1)_{2(m+n-k-i)}
            * (m-i+1)_{2i} 3F2(k+2, -k-1, -i; -m-i, m-i+1; 1-a) (1-a)^(-i)

    Each (m-i+1)_{2i} weight is fused into its 3F2 via
    :func:`eval_weighted`, which is what makes the i > m terms (whose
    bare series has a lower-parameter pole) well defined.
    """
    a = _check_point(a)
    span = m + n - k
    total = Fraction(0)
    for i in range(span + 1):
        outer = binomial(span, span - i) * pochhammer(k - m + i + 1, 2 * (span - i))
        if outer == 0:
            continue
        series = HSeries(
            upper=(k + 2, -k - 1, -i),
            lower=(-m - i, m - i + 1),
            argument=1 - a,
        )
        weighted = eval_weighted(series, weight_index=1, weight_length=2 * i)
        total += a**i * outer * weighted * (1 - a) ** (-i)
    return total
