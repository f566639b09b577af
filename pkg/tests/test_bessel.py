from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bessellin import (
    BiLaurent,
    UniPoly,
    a1,
    a2,
    bessel_q,
    monomial_to_qbasis,
    ordinary_bessel_y,
    qbasis_to_monomial,
    reverse_bessel_theta,
)
from bessellin.bessel import _derivative, _monic_factor

U = UniPoly([0, F(1)])
U_SQ = UniPoly([0, 0, F(1)])


def test_q0_is_one():
    assert bessel_q(0) == UniPoly([F(1)])


def test_q1_and_q2_coefficients():
    assert bessel_q(1) == UniPoly([F(1), F(1)])
    assert bessel_q(2) == UniPoly([F(1), F(1), F(1, 3)])


def test_q6_satisfies_three_term_recurrence():
    # q_6 built from the defining sum must equal q_5 + u^2/99 * q_4.
    assert bessel_q(6) == bessel_q(5) + U_SQ * bessel_q(4) * F(1, 99)


@pytest.mark.parametrize("n", range(1, 21))
def test_three_term_recurrence(n):
    lhs = bessel_q(n + 1) - bessel_q(n) - U_SQ * bessel_q(n - 1) * F(1, 4 * n * n - 1)
    assert not lhs


@pytest.mark.parametrize("n", range(1, 21))
def test_derivative_recurrence(n):
    lhs = _derivative(bessel_q(n)) - bessel_q(n) + U * bessel_q(n - 1) * F(1, 2 * n - 1)
    assert not lhs


@pytest.mark.parametrize("n", range(21))
def test_normalized_at_zero(n):
    assert bessel_q(n).coefficient(0) == 1


def test_theta2_value_and_scaling():
    assert reverse_bessel_theta(2) == UniPoly([F(3), F(3), F(1)])
    assert reverse_bessel_theta(2) == bessel_q(2) * F(3)


@pytest.mark.parametrize("n", range(13))
def test_theta_is_monic_multiple(n):
    theta = reverse_bessel_theta(n)
    assert theta.coefficient(n) == 1
    assert theta == bessel_q(n) * _monic_factor(n)


def test_y2_value():
    assert ordinary_bessel_y(2) == UniPoly([F(1), F(3), F(3)])


@pytest.mark.parametrize("n", range(13))
def test_ordinary_family_is_coefficient_reversal(n):
    theta = reverse_bessel_theta(n)
    reversed_coeffs = [theta.coefficient(n - k) for k in range(n + 1)]
    assert ordinary_bessel_y(n) == UniPoly(reversed_coeffs)


def test_qbasis_identity_expansion():
    coeffs = monomial_to_qbasis(bessel_q(3))
    assert coeffs == (
        BiLaurent.zero(),
        BiLaurent.zero(),
        BiLaurent.zero(),
        BiLaurent.constant(1),
    )


def test_qbasis_u_squared():
    # u^2 = 3 q_2 - 3 q_1 exactly; the constant coefficient is zero.
    coeffs = monomial_to_qbasis(U_SQ)
    assert coeffs == (
        BiLaurent.zero(),
        BiLaurent.constant(-3),
        BiLaurent.constant(3),
    )
    assert qbasis_to_monomial(coeffs) == U_SQ


def test_qbasis_symbolic_product():
    product = UniPoly([BiLaurent.constant(1), a1]) * UniPoly([BiLaurent.constant(1), a2])
    coeffs = monomial_to_qbasis(product)
    assert coeffs == (
        BiLaurent.constant(1) - a1 - a2,
        a1 + a2 - 3 * a1 * a2,
        3 * a1 * a2,
    )


def test_qbasis_zero_polynomial():
    assert monomial_to_qbasis(UniPoly()) == ()
    assert qbasis_to_monomial(()) == UniPoly()


small_coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=6)
small_bilaurents = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), small_coeffs, max_size=3
).map(BiLaurent)


@settings(max_examples=40)
@given(st.lists(small_bilaurents, max_size=9))
def test_qbasis_round_trip(coeff_list):
    p = UniPoly(coeff_list)
    assert qbasis_to_monomial(monomial_to_qbasis(p)) == p
