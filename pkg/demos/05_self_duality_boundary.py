#!/usr/bin/env python3
"""Where the correspondence breaks: rings without a self-duality form.

The preprojective/dual-number correspondence needs the base ring to be
self-dual as a module over itself (equivalently: to carry a linear form
whose Gram matrix on products is invertible).  The square-zero rings
F_q[t_1..t_n]/(t_1..t_n)^2 lose that property for n > 1, and the two
orbit counts then differ by exactly (q^n - 1)(q^(n-1) - 1).
"""

from quivercount import (counterexample_counts, make_dual_numbers,
                         make_prime_field, make_square_zero, make_truncated)

f2 = make_prime_field(2)

print("Self-duality detection by exhaustive form search:")
for label, ring in [("k_2(F_2)", make_truncated(f2, 2)),
                    ("k_3(F_2)", make_truncated(f2, 3)),
                    ("F_2[eps]", make_dual_numbers(f2)),
                    ("sqz(F_2, 1)", make_square_zero(f2, 1)),
                    ("sqz(F_2, 2)", make_square_zero(f2, 2)),
                    ("sqz(F_2, 3)", make_square_zero(f2, 3))]:
    form = ring.find_frobenius_form()
    verdict = "form %s" % (form,) if form is not None else "no form exists"
    print("  %-12s %s" % (label, verdict))
print()

print("Counting both sides of the correspondence over sqz(F_q, n):")
print("  A = scaling classes over sqz(F_q, n)[eps]")
print("  B = zero-fiber classes over sqz(F_q, n)")
for n, q in [(1, 2), (1, 3), (2, 2), (2, 3)]:
    a, b = counterexample_counts(n, q)
    gap = (q ** n - 1) * (q ** (n - 1) - 1)
    print("  n = %d, q = %d:  A = %3d  B = %3d  B - A = %3d  (q^n-1)(q^(n-1)-1) = %3d"
          % (n, q, a, b, b - a, gap))
print()
print("Equality holds exactly at n = 1, the one self-dual case.")
