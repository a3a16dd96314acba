"""Counting generalized de Bruijn words and the primitive-root criterion."""

from unclustered_bwt.numtheory import (
    artin_equivalence_check,
    count_gdbw_ternary,
    lower_bound_unclustered,
    phi_generalized,
)
from unclustered_bwt.oracle import brute_phi, count_unclustered, enumerate_gdbw

print(" n  Phi_3  brute  gdbw  enumerated  bound  unclustered(3n)")
for n in (1, 2, 3):
    print(f"{n:>2} {phi_generalized(3, n):>6} {brute_phi(3, n):>6} {count_gdbw_ternary(n):>5}"
          f" {len(enumerate_gdbw(3, n)):>11} {str(lower_bound_unclustered(n)):>6}"
          f" {count_unclustered(3, 3 * n):>16}")

print("\nThe word (k-1)...10 repeated n times is a BWT image exactly when")
print("kn+1 is prime and k is a primitive root modulo kn+1:")
for k in (2, 3, 4, 5):
    print(f"  k={k}:", artin_equivalence_check(k, 40))
