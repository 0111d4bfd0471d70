"""
Alternating binomial sums that vanish
=====================================

Two identity families sit underneath the closed-form proofs. Both are
evaluated with exact rationals, so "equals zero" means exactly zero.
"""

from fractions import Fraction

from mpinc import (
    gauss_binomial_formula_check,
    gaussian_binomial,
    int_polynomial,
    poly_eval,
    q_ruiz_sum,
    ruiz_sum,
)

# sum_k (-1)^k C(n,k) p(k) = 0 whenever deg p < n
p = int_polynomial([4, -3, 0, 2])  # 4 - 3x + 2x^3
print("p(x) = 4 - 3x + 2x^3, p(2) =", poly_eval(p, 2))
for n in (4, 7, 12):
    print(f"  ruiz_sum(n={n}) = {ruiz_sum(n, p)}")

# the q-analogue: Gaussian binomials with a q-power weight, vanishing
# for all 0 <= m < n
print("\nq-analogue sums for q = 3:")
for n, m in [(2, 0), (5, 2), (9, 8)]:
    print(f"  q_ruiz_sum(n={n}, m={m}) = {q_ruiz_sum(n, m, 3)}")

# outside that range the sum is generally nonzero
print("  q_ruiz_sum(n=1, m=1) =", q_ruiz_sum(1, 1, 2))

# the finite product expansion that proves them:
# prod_j (x + q^j a) = sum_i [n i]_q q^C(i,2) a^i x^(n-i)
x, a = Fraction(3, 7), Fraction(-2, 5)
print("\nproduct formula holds at random-ish rationals:",
      gauss_binomial_formula_check(6, x, a, 4))
print("[6 choose 3]_4 =", gaussian_binomial(6, 3, 4))
