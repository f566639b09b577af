"""Build one linearization table three independent ways.

The table (beta_0, ..., beta_{n+m}) expands q_n(a1*u) * q_m(a2*u) in the
basis {q_k(u)}.  The three engines share no code path beyond scalar
arithmetic, so their exact agreement is strong evidence each is right.

Run:  python demos/linearization_table.py
"""

from bessellin import (
    bessel_q,
    a1,
    a2,
    linearize_closed_form,
    linearize_hypergeometric,
    linearize_oracle,
    qbasis_to_monomial,
)

N, M = 3, 5

oracle = linearize_oracle(N, M)          # expand + back-substitute
closed = linearize_closed_form(N, M)     # double-sum closed form
hyper = linearize_hypergeometric(N, M)   # single sum over terminating 3F2s

print(f"linearization table for (n, m) = ({N}, {M}):")
for k in range(N + M, -1, -1):
    print(f"  beta[{k}] = {oracle[k].render()}")

print("\nall three engines agree coefficient by coefficient:",
      all(closed[k] == oracle[k] == hyper[k] for k in range(N + M + 1)))

# The definitional check: summing beta_k * q_k(u) must reproduce the
# original product exactly.
product = bessel_q(N).scale_argument(a1) * bessel_q(M).scale_argument(a2)
print("reconstruction is exact:", qbasis_to_monomial(oracle.coeffs) == product)

# A couple of structural facts worth seeing once:
print("\ntop coefficient carries a1^n a2^m:", oracle[N + M].render())
print("bottom coefficient:", oracle[0].render())
print("evaluated at a1 = a2 = 1:", [str(c.substitute(1, 1)) for c in oracle.coeffs])
