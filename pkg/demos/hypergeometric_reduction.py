"""Collapsing a weighted sum of 3F2 values into a single 2F1.

For each index k the weighted 3F2 sum equals one closed 2F1 expression;
which expression depends on whether k sits in the upper or lower half
of 0..n+m.  The lower branch's gamma prefactor hits poles that are
resolved by the pairwise shared-shift limit; where a pole of the
denominator gamma is unpaired the whole side collapses to zero, exactly
matching the vanishing of the specialized linearization coefficients.

Run:  python demos/hypergeometric_reduction.py
"""

from fractions import Fraction as F

from bessellin import (
    reduction_2f1_lower,
    reduction_2f1_upper,
    reduction_branches,
    reduction_3f2_sum,
)

print("hand-checkable anchor (n, m, k) = (1, 1, 1):")
for a in (F(1, 2), F(1, 3), F(2, 5)):
    lhs = reduction_2f1_upper(1, 1, 1, a)
    rhs = reduction_3f2_sum(1, 1, 1, a)
    closed = (6 * a * a - 6 * a + 2) / (1 - a)
    print(f"  a={a}: 2F1 side = {lhs}, 3F2 sum = {rhs}, (6a^2-6a+2)/(1-a) = {closed}")

print("\nbranch walk at (n, m) = (2, 3), a = 1/3:")
a = F(1, 3)
for k in range(6):
    branches = reduction_branches(2, 3, k)
    rhs = reduction_3f2_sum(2, 3, k, a)
    for branch in branches:
        side = reduction_2f1_upper if branch == "upper" else reduction_2f1_lower
        lhs = side(2, 3, k, a)
        print(f"  k={k} [{branch:5}] lhs = {str(lhs):>12}  rhs = {str(rhs):>12}  equal: {lhs == rhs}")

print("\nlower-branch pole anatomy:")
print("  (2,2,1): unpaired denominator pole -> side is exactly 0:",
      reduction_2f1_lower(2, 2, 1, F(1, 3)))
print("  (1,5,2): paired poles -> finite nonzero value:",
      reduction_2f1_lower(1, 5, 2, F(1, 3)))
print("           matches the sum side:",
      reduction_2f1_lower(1, 5, 2, F(1, 3)) == reduction_3f2_sum(1, 5, 2, F(1, 3)))
