#!/usr/bin/env python3
"""Counting rank-one representations over truncated polynomial rings.

A representation of a quiver over R = F_q[t]/(t^d) that is free of rank
one at every vertex is determined by one ring element per arrow.  The
number of isomorphism classes that stay indecomposable over the
algebraic closure is a polynomial A_d in q, computed here three ways:
from the closed-form subgraph sum, from the cycle-graph formula, and by
literally partitioning the representation space into orbits.
"""

from quivercount import (a_d_cyclic_closed_form, a_d_polynomial, cycle_graph,
                         cycle_quiver, make_prime_field, make_truncated,
                         toric_ai_orbit_count)

c3 = cycle_graph(3)
print("The triangle:", c3)
print()

for d in range(1, 5):
    print("A_%d(C3, q) = %s" % (d, a_d_polynomial(c3, d)))
print()

print("The same polynomials from the cycle closed form:")
for d in range(1, 5):
    assert a_d_cyclic_closed_form(3, d) == a_d_polynomial(c3, d)
    print("  d = %d: closed form agrees" % d)
print()

print("Now the brute force check.  Over k_2(F_2) there are 4^3 = 64")
print("representations of the triangle; the unit group (|R^x| = 2 per")
print("vertex) partitions them into orbits, and the classes with")
print("connected support are the indecomposable ones:")
ring = make_truncated(make_prime_field(2), 2)
count = toric_ai_orbit_count(cycle_quiver(3), ring)
value = a_d_polynomial(c3, 2)(2)
print("  orbit partition: %d    A_2(C3, q) at q = 2: %d" % (count, value))
assert count == value == 21
print()

print("At q = 1 the polynomial counts spanning trees (times d^(n-1)):")
for d in range(1, 4):
    print("  A_%d(C3, 1) = %d = %d^2 * %d spanning trees"
          % (d, a_d_polynomial(c3, d)(1), d, c3.spanning_tree_count()))
