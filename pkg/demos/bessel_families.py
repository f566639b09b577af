"""Tour of the three Bessel polynomial families and the q-basis.

Run:  python demos/bessel_families.py
"""

from fractions import Fraction as F

from bessellin import (
    UniPoly,
    a1,
    a2,
    bessel_q,
    monomial_to_qbasis,
    ordinary_bessel_y,
    qbasis_to_monomial,
    reverse_bessel_theta,
)
from bessellin.bessel import _derivative

# --- the base family q_n, normalized to q_n(0) = 1 -----------------------

print("base family:")
for n in range(4):
    print(f"  q_{n}(u) = {bessel_q(n).render()}")

# They satisfy a three-term recurrence and a derivative recurrence; both
# are exact polynomial identities, so the residuals are literally zero.
u = UniPoly([0, F(1)])
u_sq = UniPoly([0, 0, F(1)])
for n in (1, 5, 12):
    step = bessel_q(n + 1) - bessel_q(n) - u_sq * bessel_q(n - 1) * F(1, 4 * n * n - 1)
    slope = _derivative(bessel_q(n)) - bessel_q(n) + u * bessel_q(n - 1) * F(1, 2 * n - 1)
    print(f"  n={n}: recurrence residual = {step.render()}, derivative residual = {slope.render()}")

# --- the monic (reverse) and ordinary companions --------------------------

print("\nreverse family (monic):")
for n in range(4):
    print(f"  theta_{n}(u) = {reverse_bessel_theta(n).render()}")

print("\nordinary family (coefficient reversal of theta):")
for n in range(4):
    print(f"  y_{n}(u) = {ordinary_bessel_y(n).render()}")

theta = reverse_bessel_theta(7)
reversed_coeffs = [theta.coefficient(7 - k) for k in range(8)]
print("\n  y_7 equals theta_7 with coefficients reversed:",
      ordinary_bessel_y(7) == UniPoly(reversed_coeffs))

# --- expanding arbitrary polynomials in the q-basis ------------------------

# u^2 = 3 q_2 - 3 q_1: the constant slot is exactly zero.
coeffs = monomial_to_qbasis(u_sq)
print("\nq-basis expansion of u^2:", [c.render() for c in coeffs])
print("  reconstructs exactly:", qbasis_to_monomial(coeffs) == u_sq)

# The conversion also works over symbolic coefficients; this tiny case is
# the degree-(1,1) linearization table in disguise.
product = UniPoly([1 + 0 * a1, a1]) * UniPoly([1 + 0 * a2, a2])
coeffs = monomial_to_qbasis(product)
print("\nq-basis expansion of (1 + a1*u)(1 + a2*u):")
for k, c in enumerate(coeffs):
    print(f"  coefficient of q_{k}: {c.render()}")
