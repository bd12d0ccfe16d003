"""Exact counting of locally free quiver representations over finite
commutative algebras.

Counting polynomials and rational generating functions for rank-one
representations over truncated polynomial rings, a convolution calculus
of graph invariants with an inversion identity, finite commutative
algebras by structure constants, and brute-force group-average engines
that cross-validate every closed form.  All arithmetic is exact.
"""

from .cyclotomic import CycInt, cyclotomic_polynomial
from .families import (all_connected_multigraphs, banana_graph, banana_quiver,
                       cycle_graph, cycle_quiver, jordan_quiver, loops_graph,
                       path_graph, path_quiver, point_graph,
                       random_connected_multigraph)
from .finite_algebra import (FiniteAlgebra, make_dual_numbers, make_field,
                             make_field_ext, make_prime_field,
                             make_square_zero, make_truncated, mat_det,
                             mat_identity, mat_inverse, mat_mul,
                             matrix_is_invertible, ring_from_spec,
                             truncated_depth, truncated_generator)
from .genfun import (GraphChar, a_genfun, check_duality, check_recursion,
                     convolve, cvector_of_filtration, epsilon1_char,
                     epsilon_char, psi_char, psi_inverse_char, q_eulerian,
                     r_d_char, r_d_via_convolution, r_genfun, r_of_cvector,
                     series_coefficient)
from .multigraph import GuardError, Multigraph, Quiver, strict_filtrations
from .polynomials import QPoly, QTPoly
from .ratfun import RatQT
from .repenum import (a_count, a_preproj, counterexample_counts, double_quiver,
                      enumerate_group, fix_count, fourier_fiber_count,
                      gl_elements, gl_order, group_order, m_count, m_preproj,
                      moment_map, preproj_orbit_partition, stabilizer_order,
                      toric_ai_orbit_count, toric_point)
from .toric import (a_d_cyclic_closed_form, a_d_polynomial, delta,
                    r_d_polynomial, toric_type_orbit_data)

__version__ = "0.1.0"
