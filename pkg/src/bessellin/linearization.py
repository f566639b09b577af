"""Linearization coefficients of Bessel polynomial products.

The object of study is the coefficient table (beta_0, ..., beta_{n+m})
expanding q_n(a1*u) * q_m(a2*u) in the basis {q_k(u)}.  Three
independent engines produce it:

* ``oracle`` - the definitional route: expand the product and convert
  to the q-basis by exact back-substitution.
* ``closed_form`` - a double sum of Pochhammer-weighted monomials with
  a Laurent prefactor that must (and is asserted to) collapse to a true
  polynomial.
* ``hypergeometric`` - a single sum whose inner factor is a terminating
  3F2 evaluated symbolically in a2.

The engines are verified against each other, against the two-index
shift recurrences the table satisfies, and against the a1 = a,
a2 = 1 - a specialization (the Berg-Vignat regime) where the
coefficients vanish below min(n, m) and are nonnegative on [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import binomial, pochhammer
from .bessel import bessel_q, monomial_to_qbasis
from .hypergeom import SYMBOLIC, HSeries, eval_weighted
from .polynomials import BiLaurent, UniPoly, a1, a2, assert_polynomial
from .report import FAIL, PASS, CheckRecord

__all__ = [
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
]


class IdentityViolation(AssertionError):
    """An identity expected to hold exactly left a nonzero residual."""

    def __init__(self, record: CheckRecord):
        self.record = record
        super().__init__(record.render())


class PositivityViolation(AssertionError):
    """A sampled coefficient expected to be nonnegative was negative."""

    def __init__(self, record: CheckRecord):
        self.record = record
        super().__init__(record.render())


@dataclass(frozen=True)
class LinTable:
    """Full coefficient vector for one (n, m), with engine provenance."""

    n: int
    m: int
    coeffs: tuple[BiLaurent, ...]
    engine: str

    def __post_init__(self):
        if len(self.coeffs) != self.n + self.m + 1:
            raise ValueError(
                f"expected {self.n + self.m + 1} coefficients, got {len(self.coeffs)}"
            )

    def __getitem__(self, k: int) -> BiLaurent:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)


def _check_degrees(n: int, m: int) -> None:
    if n < 0 or m < 0:
        raise ValueError(f"degrees must be nonnegative, got ({n}, {m})")


@lru_cache(maxsize=None)
def linearize_oracle(n: int, m: int) -> LinTable:
    """Definitional expansion of q_n(a1*u) * q_m(a2*u) in the q-basis."""
    _check_degrees(n, m)
    left = bessel_q(n).scale_argument(a1)
    right = bessel_q(m).scale_argument(a2)
    coeffs = monomial_to_qbasis(left * right)
    # Degenerate degrees leave the table shorter than n+m+1 only when
    # the product itself degenerates, which never happens (q_n has
    # degree exactly n); pad defensively for the zero-degree case.
    padded = list(coeffs) + [BiLaurent.zero()] * (n + m + 1 - len(coeffs))
    return LinTable(n=n, m=m, coeffs=tuple(padded), engine="oracle")


def _prefactor_scalar(n: int, m: int, k: int) -> Fraction:
    span = m + n - k
    half = Fraction(1, 2)
    return pochhammer(half, k) / (
        4**span * math.factorial(span) * pochhammer(half, n) * pochhammer(half, m)
    )


def coefficient_closed_form(n: int, m: int, k: int) -> BiLaurent:
    """Double-sum closed form for the k-th coefficient.

    The Laurent prefactor a1^(k-m) a2^(k-n) provably cancels against
    the summed monomials; the cancellation is asserted rather than
    assumed.
    """
    _check_degrees(n, m)
    if not 0 <= k <= n + m:
        raise ValueError(f"k={k} outside 0..{n + m}")
    span = m + n - k
    terms: dict[tuple[int, int], Fraction] = {}
    for i in range(span + 1):
        outer = binomial(span, i) * pochhammer(n + 1 - i, 2 * i)
        if outer == 0:
            continue
        for j in range(span - i + 1):
            inner = (
                binomial(span - i, j)
                * pochhammer(-n + k + j + i + 1, 2 * (span - i - j))
                * pochhammer(k + 2 - j, 2 * j)
            )
            if inner == 0:
                continue
            coeff = (-1) ** j * outer * inner
            # Exponents after the a1^(k-m) a2^(k-n) prefactor.
            key = ((k - m) + (span - i), (k - n) + (j + i))
            total = terms.get(key, 0) + coeff
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
    value = BiLaurent(terms) * _prefactor_scalar(n, m, k)
    return assert_polynomial(value)


def coefficient_hypergeometric(n: int, m: int, k: int) -> BiLaurent:
    """Single-sum form: terminating 3F2 factors evaluated symbolically in a2.

    The weight (m-i+1)_{2i} is fused into its 3F2 (see
    :func:`bessellin.hypergeom.eval_weighted`); that keeps the i > m
    terms finite, where the bare series has a lower-parameter pole
    against the weight's zero.
    """
    _check_degrees(n, m)
    if not 0 <= k <= n + m:
        raise ValueError(f"k={k} outside 0..{n + m}")
    span = m + n - k
    terms: dict[tuple[int, int], Fraction] = {}
    for i in range(span + 1):
        outer = binomial(span, span - i) * pochhammer(k - m + i + 1, 2 * (span - i))
        if outer == 0:
            continue
        series = HSeries(
            upper=(k + 2, -k - 1, -i),
            lower=(-m - i, m - i + 1),
            argument=SYMBOLIC,
        )
        poly = eval_weighted(series, weight_index=1, weight_length=2 * i)
        assert isinstance(poly, UniPoly)
        for j, c in enumerate(poly.coeffs):
            if not c:
                continue
            # a1^(k-m) a2^m prefactor joined with a1^i a2^(j-i).
            key = ((k - m) + i, m + (j - i))
            total = terms.get(key, 0) + outer * c
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
    value = BiLaurent(terms) * _prefactor_scalar(n, m, k)
    return assert_polynomial(value)


@lru_cache(maxsize=None)
def linearize_closed_form(n: int, m: int) -> LinTable:
    coeffs = tuple(coefficient_closed_form(n, m, k) for k in range(n + m + 1))
    return LinTable(n=n, m=m, coeffs=coeffs, engine="closed_form")


@lru_cache(maxsize=None)
def linearize_hypergeometric(n: int, m: int) -> LinTable:
    coeffs = tuple(coefficient_hypergeometric(n, m, k) for k in range(n + m + 1))
    return LinTable(n=n, m=m, coeffs=coeffs, engine="hypergeometric")


ENGINES = {
    "oracle": linearize_oracle,
    "closed_form": linearize_closed_form,
    "hypergeometric": linearize_hypergeometric,
}


def linearize(n: int, m: int, engine: str = "oracle") -> LinTable:
    """Compute the coefficient table with the selected engine."""
    try:
        builder = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; pick one of {sorted(ENGINES)}")
    return builder(n, m)


def _shift_multiplier(n: int, m: int) -> BiLaurent:
    # a1^2 (2m-1)(2m+1) / (a2^2 (2n-1)(2n+1)): the Laurent factor tying
    # the (n+1, m-1) table to the (n-1, m+1) one.
    scale = Fraction((2 * m - 1) * (2 * m + 1), (2 * n - 1) * (2 * n + 1))
    return BiLaurent.monomial(2, -2, scale)


def verify_shift_recurrences(n: int, m: int, engine: str = "oracle") -> list[CheckRecord]:
    """Check the two-index shift recurrences of the coefficient tables.

    For n, m >= 1, with C = a1^2 (2m-1)(2m+1) / (a2^2 (2n-1)(2n+1)):

    * top index:    beta_{n+m}^{(n+1,m-1)} - C beta_{n+m}^{(n-1,m+1)} = 0
    * 0 <= k < n+m: beta_k^{(n+1,m-1)} - C beta_k^{(n-1,m+1)}
                      = beta_k^{(n,m-1)} - C beta_k^{(n-1,m)}

    Both are exact identities in the Laurent ring.  Returns one record
    per checked k.
    """
    if n < 1 or m < 1:
        raise ValueError(f"shift recurrences need n, m >= 1, got ({n}, {m})")
    make = ENGINES[engine]
    up = make(n + 1, m - 1)
    down = make(n - 1, m + 1)
    right = make(n, m - 1)
    left = make(n - 1, m)
    multiplier = _shift_multiplier(n, m)
    records = []
    top = n + m
    residual = up[top] - multiplier * down[top]
    records.append(_residual_record("shift-recurrence-top", n, m, top, residual))
    for k in range(top):
        residual = (up[k] - multiplier * down[k]) - (right[k] - multiplier * left[k])
        records.append(_residual_record("shift-recurrence", n, m, k, residual))
    return records


def _residual_record(check: str, n: int, m: int, k: int, residual: BiLaurent, where: str = "") -> CheckRecord:
    if residual:
        return CheckRecord(
            check=check, n=n, m=m, k=k, where=where,
            status=FAIL, detail=f"residual {residual.render()}",
        )
    return CheckRecord(check=check, n=n, m=m, k=k, where=where, status=PASS)


def berg_vignat_substitute(p: BiLaurent) -> UniPoly:
    """Specialize a1 -> a, a2 -> 1-a, returning a polynomial in a.

    Requires ``p`` to be a true polynomial (negative exponents have no
    finite expansion on the substitution line).
    """
    assert_polynomial(p)
    degree = max((e1 + e2 for (e1, e2), _ in p.terms()), default=0)
    out = [Fraction(0)] * (degree + 1)
    for (e1, e2), coeff in p.terms():
        # (1-a)^e2 expanded by binomials onto a^(e1+t).
        for t in range(e2 + 1):
            out[e1 + t] += coeff * (-1) ** t * binomial(e2, t)
    return UniPoly(out)


_POSITIVITY_SAMPLES = tuple(Fraction(j, 10) for j in range(1, 10))


def berg_vignat_check(n: int, m: int, engine: str = "oracle") -> list[CheckRecord]:
    """Verify the a1 = a, a2 = 1-a specialization for one (n, m).

    Three families of checks, all on the substituted univariate tables:

    * the three-term recurrence
      beta_{k+1}^{(n,m)}(a)/(2k+1) = a^2/(2n-1) beta_k^{(n-1,m)}(a)
                                   + (1-a)^2/(2m-1) beta_k^{(n,m-1)}(a)
      exactly, for k = 0 .. n+m-1;
    * beta_k^{(n,m)}(a) is the exact zero polynomial for k < min(n, m);
    * beta_k^{(n,m)}(a) >= 0 at a = 1/10 .. 9/10 for k >= min(n, m).
    """
    if n < 1 or m < 1:
        raise ValueError(f"the specialization checks need n, m >= 1, got ({n}, {m})")
    make = ENGINES[engine]
    table = [berg_vignat_substitute(c) for c in make(n, m).coeffs]
    left_sub = [berg_vignat_substitute(c) for c in make(n - 1, m).coeffs]
    right_sub = [berg_vignat_substitute(c) for c in make(n, m - 1).coeffs]
    a_sq = UniPoly([0, 0, Fraction(1)])
    one_minus_a_sq = UniPoly([Fraction(1), Fraction(-2), Fraction(1)])
    records = []
    for k in range(n + m):
        lhs = table[k + 1] * Fraction(1, 2 * k + 1)
        rhs = (
            a_sq * left_sub[k] * Fraction(1, 2 * n - 1)
            + one_minus_a_sq * right_sub[k] * Fraction(1, 2 * m - 1)
        )
        residual = lhs - rhs
        if residual:
            records.append(CheckRecord(
                check="berg-vignat-recurrence", n=n, m=m, k=k,
                status=FAIL, detail=f"residual {residual.render()}",
            ))
        else:
            records.append(CheckRecord(check="berg-vignat-recurrence", n=n, m=m, k=k))
    low = min(n, m)
    for k in range(low):
        poly = table[k]
        if poly:
            records.append(CheckRecord(
                check="berg-vignat-vanishing", n=n, m=m, k=k,
                status=FAIL, detail=f"nonzero specialization {poly.render('a')}",
            ))
        else:
            records.append(CheckRecord(check="berg-vignat-vanishing", n=n, m=m, k=k))
    for k in range(low, n + m + 1):
        witness = None
        for point in _POSITIVITY_SAMPLES:
            value = table[k].evaluate(point)
            if value < 0:
                witness = (point, value)
                break
        if witness is None:
            records.append(CheckRecord(check="berg-vignat-positivity", n=n, m=m, k=k))
        else:
            records.append(CheckRecord(
                check="berg-vignat-positivity", n=n, m=m, k=k,
                status=FAIL, detail=f"value {witness[1]} at a={witness[0]}",
            ))
    return records


def ensure_all_pass(records) -> None:
    """Raise the matching violation for the first failing record, if any."""
    for record in records:
        if record.status == FAIL:
            if "positivity" in record.check:
                raise PositivityViolation(record)
            raise IdentityViolation(record)
