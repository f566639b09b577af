"""Exact polynomial arithmetic over two rings.

``BiLaurent`` is a sparse bivariate Laurent polynomial in the scale
symbols a1, a2 with exact rational coefficients: a finite map from
integer exponent pairs to nonzero coefficients.  Negative exponents are
allowed because they arise transiently in the closed-form engines; the
final coefficients must collapse to true polynomials, and
:func:`assert_polynomial` turns that cancellation into a checked
assertion rather than a silent assumption.

``UniPoly`` is a dense univariate polynomial in the expansion variable
u whose coefficients live in a pluggable commutative ring (rationals or
``BiLaurent``); coefficients only need ``+``, ``*``, unary ``-`` and a
truthiness test for zero.

Both types are immutable, canonical on construction (no stored zero
terms, no trailing zero coefficients), and compare by structural
equality, so every identity check in the package reduces to "the
canonical difference is zero".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence

__all__ = [
    "BiLaurent",
    "UniPoly",
    "NotPolynomialError",
    "assert_polynomial",
    "a1",
    "a2",
]


class NotPolynomialError(ValueError):
    """A Laurent value expected to be a polynomial kept negative exponents."""

    def __init__(self, offending_terms):
        self.offending_terms = tuple(offending_terms)
        terms = ", ".join(
            f"{coeff}*a1^{e1}*a2^{e2}" for (e1, e2), coeff in self.offending_terms
        )
        super().__init__(f"negative exponents did not cancel: {terms}")


def _coerce_scalar(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return NotImplemented


class BiLaurent:
    """Sparse bivariate Laurent polynomial in a1, a2 over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction | int] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (e1, e2), coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[(int(e1), int(e2))] = coeff
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff=1) -> "BiLaurent":
        return cls({(e1, e2): Fraction(coeff)})

    @classmethod
    def constant(cls, value) -> "BiLaurent":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls()

    # -- inspection ---------------------------------------------------

    def terms(self) -> tuple[tuple[tuple[int, int], Fraction], ...]:
        """Terms in canonical (lexicographic by exponent pair) order."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, e1: int, e2: int) -> Fraction:
        return self._terms.get((e1, e2), Fraction(0))

    @property
    def is_polynomial(self) -> bool:
        return all(e1 >= 0 and e2 >= 0 for e1, e2 in self._terms)

    @property
    def total_degree(self) -> int | None:
        """Max of e1+e2 over stored terms; None for the zero value."""
        if not self._terms:
            return None
        return max(e1 + e2 for e1, e2 in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(self.terms())

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BiLaurent):
            scalar = _coerce_scalar(other)
            if scalar is NotImplemented:
                return NotImplemented
            other = BiLaurent.constant(scalar)
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            total = merged.get(key, 0) + coeff
            if total:
                merged[key] = total
            else:
                merged.pop(key, None)
        result = BiLaurent.__new__(BiLaurent)
        result._terms = merged
        return result

    __radd__ = __add__

    def __neg__(self):
        result = BiLaurent.__new__(BiLaurent)
        result._terms = {key: -coeff for key, coeff in self._terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, BiLaurent):
            return self + (-other)
        scalar = _coerce_scalar(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self + BiLaurent.constant(-scalar)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, BiLaurent):
            scalar = _coerce_scalar(other)
            if scalar is NotImplemented:
                return NotImplemented
            if not scalar:
                return BiLaurent.zero()
            result = BiLaurent.__new__(BiLaurent)
            result._terms = {k: c * scalar for k, c in self._terms.items()}
            return result
        product: dict[tuple[int, int], Fraction] = {}
        for (p1, p2), c in self._terms.items():
            for (q1, q2), d in other._terms.items():
                key = (p1 + q1, p2 + q2)
                total = product.get(key, 0) + c * d
                if total:
                    product[key] = total
                else:
                    product.pop(key, None)
        result = BiLaurent.__new__(BiLaurent)
        result._terms = product
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        if len(self._terms) == 1:
            # Monomial fast path keeps the Laurent prefactors cheap.
            ((e1, e2), coeff), = self._terms.items()
            return BiLaurent.monomial(e1 * exponent, e2 * exponent, coeff**exponent)
        result = BiLaurent.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, BiLaurent):
            return self._terms == other._terms
        scalar = _coerce_scalar(other)
        if scalar is NotImplemented:
            return NotImplemented
        if not scalar:
            return not self._terms
        return self._terms == {(0, 0): scalar}

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- evaluation and rendering --------------------------------------

    def substitute(self, v1, v2) -> Fraction:
        """Exact evaluation at a1=v1, a2=v2.

        Raises ZeroDivisionError when a negative exponent meets a zero
        value.
        """
        v1 = Fraction(v1)
        v2 = Fraction(v2)
        total = Fraction(0)
        for (e1, e2), coeff in self._terms.items():
            total += coeff * v1**e1 * v2**e2
        return total

    def render(self) -> str:
        """Canonical text form: lexicographic terms, `num/den*a1^e1*a2^e2`.

        Unit parts are suppressed: exponent 1 drops the caret, exponent
        0 drops the variable, and a unit coefficient drops the leading
        number unless the term is constant.
        """
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for index, ((e1, e2), coeff) in enumerate(self.terms()):
            magnitude = -coeff if coeff < 0 else coeff
            factors: list[str] = []
            if e1:
                factors.append("a1" if e1 == 1 else f"a1^{e1}")
            if e2:
                factors.append("a2" if e2 == 1 else f"a2^{e2}")
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if index == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"BiLaurent({self.render()})"


def assert_polynomial(p: BiLaurent) -> BiLaurent:
    """Return ``p`` unchanged if no exponent is negative.

    Raises :class:`NotPolynomialError` carrying the offending terms
    otherwise.  Used to guard the collapse of Laurent prefactors in the
    closed-form engines: a failed cancellation is an implementation
    bug, never a valid outcome.
    """
    bad = [item for item in p.terms() if item[0][0] < 0 or item[0][1] < 0]
    if bad:
        raise NotPolynomialError(bad)
    return p


# The two scale symbols, ready to combine into larger expressions.
a1 = BiLaurent.monomial(1, 0)
a2 = BiLaurent.monomial(0, 1)


class UniPoly:
    """Dense univariate polynomial in u over a pluggable coefficient ring."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, power: int, coeff) -> "UniPoly":
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, power: int):
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        short, long_ = sorted((self._coeffs, other._coeffs), key=len)
        summed = list(long_)
        for i, c in enumerate(short):
            summed[i] = summed[i] + c
        return UniPoly(summed)

    def __neg__(self):
        return UniPoly([-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self._coeffs or not other._coeffs:
                return UniPoly()
            product = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, c in enumerate(self._coeffs):
                if not c:
                    continue
                for j, d in enumerate(other._coeffs):
                    if d:
                        product[i + j] = product[i + j] + c * d
            return UniPoly(product)
        # Scalar (or coefficient-ring element) multiplication.
        return UniPoly([c * other for c in self._coeffs])

    def __rmul__(self, other):
        return UniPoly([other * c for c in self._coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if len(self._coeffs) != len(other._coeffs):
            return False
        return all(c == d for c, d in zip(self._coeffs, other._coeffs))

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def scale_argument(self, c) -> "UniPoly":
        """p(u) -> p(c*u): multiply the coefficient of u^k by c^k.

        The multiplier may live in a larger ring than the coefficients;
        scaling a rational polynomial by a1 yields a ``BiLaurent``-
        coefficient polynomial.
        """
        scaled = []
        power = c**0
        for coeff in self._coeffs:
            scaled.append(coeff * power)
            power = power * c
        return UniPoly(scaled)

    def evaluate(self, x):
        """Horner evaluation at ``x`` (any compatible ring element)."""
        total = 0
        for coeff in reversed(self._coeffs):
            total = total * x + coeff
        return total

    def render(self, var: str = "u") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, coeff in enumerate(self._coeffs):
            if not coeff:
                continue
            if k == 0:
                parts.append(f"{coeff}")
            elif k == 1:
                parts.append(f"({coeff})*{var}")
            else:
                parts.append(f"({coeff})*{var}^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.render()})"
