#!/usr/bin/env python3
"""Exact orbit counting over finite commutative algebras.

Isomorphism classes of representations are orbits of a product of
general linear groups; their number is the group average of fixed-point
counts, each of which is a power of p read off from the nullity of a
linear system over F_p.  A determinant character sharpens the same
average so that it counts only the absolutely indecomposable classes.
Two headline structural facts are reproduced here: counts do not depend
on arrow orientations, and the preprojective relation over R matches
plain representations over R[eps]/(eps^2).
"""

from quivercount import (a_count, a_preproj, m_count, m_preproj,
                         make_dual_numbers, make_field, make_prime_field,
                         make_truncated, path_quiver)

f3 = make_prime_field(3)
a2 = path_quiver(2)

print("Two vertices, one arrow, over k_d(F_3): the d+1 classes of rank")
print("(1,1) are 0, 1, t, ..., t^(d-1) up to units; d of them are")
print("absolutely indecomposable (the nonzero ones):")
for d in (1, 2, 3):
    ring = make_truncated(f3, d)
    print("  d = %d: all classes %d, absolutely indecomposable %d"
          % (d, m_count(a2, ring, (1, 1)), a_count(a2, ring, (1, 1))))
print()

print("Orientation independence on the three-vertex path over k_2(F_4):")
a3 = path_quiver(3)
ring = make_truncated(make_field(4), 2)
for variant in a3.all_orientations():
    arrows = ", ".join("%d->%d" % (s, t) for _, s, t in variant.arrows())
    print("  %-12s a = %d" % (arrows, a_count(variant, ring, (1, 1, 1))))
print()

print("Preprojective relation vs dual numbers (same counts, different")
print("worlds): orbits in the zero fiber of the moment map over R equal")
print("orbit counts over R[eps]:")
cases = [("A2 over F_3", a2, f3, (1, 1)),
         ("A3 over F_2", path_quiver(3), make_prime_field(2), (1, 1, 1))]
for label, quiver, ring, alpha in cases:
    lhs = m_preproj(quiver, ring, alpha)
    rhs = m_count(quiver, make_dual_numbers(ring), alpha)
    print("  %-12s preprojective %d  =  dual numbers %d" % (label, lhs, rhs))
print()

lhs = a_preproj(a2, f3, (1, 1))
rhs = a_count(a2, make_dual_numbers(f3), (1, 1))
print("Absolutely indecomposable version over F_3: %d = %d" % (lhs, rhs))
