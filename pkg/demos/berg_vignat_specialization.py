"""The a1 = a, a2 = 1 - a specialization (Berg-Vignat regime).

On this line the linearization coefficients become univariate
polynomials in a with three striking properties: they satisfy a
three-term recurrence, they vanish identically below min(n, m), and
they are nonnegative on [0, 1].

Run:  python demos/berg_vignat_specialization.py
"""

from fractions import Fraction as F

from bessellin import (
    berg_vignat_check,
    berg_vignat_substitute,
    linearize_oracle,
)

N, M = 2, 8

table = [berg_vignat_substitute(c) for c in linearize_oracle(N, M).coeffs]

print(f"specialized coefficients for (n, m) = ({N}, {M}):")
for k, poly in enumerate(table):
    print(f"  beta[{k}](a) = {poly.render('a')}")

print(f"\ncoefficients below min(n, m) = {min(N, M)} vanish as exact polynomials:",
      all(not table[k] for k in range(min(N, M))))

print("\nsampled values on (0, 1) stay nonnegative:")
for k in (min(N, M), N + M // 2, N + M):
    samples = [table[k].evaluate(F(j, 10)) for j in range(1, 10)]
    print(f"  k={k}: min over a=1/10..9/10 is {min(samples)}")

# The packaged checker bundles recurrence + vanishing + positivity and
# returns one record per check.
records = berg_vignat_check(N, M)
print(f"\nberg_vignat_check({N}, {M}): {len(records)} checks,",
      "all pass" if all(r.status == "pass" for r in records) else "FAILURES")
