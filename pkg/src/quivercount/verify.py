"""Named verification batteries.

Every check recomputes a published value or structural identity with the
exact engines and reports (label, passed).  The CLI `verify` verb runs a
suite and exits nonzero if anything fails; the test suite asserts the
same batteries.
"""

import random

from .families import (all_connected_multigraphs, banana_graph, banana_quiver,
                       cycle_graph, cycle_quiver, jordan_quiver, loops_graph,
                       path_graph, path_quiver, point_graph,
                       random_connected_multigraph)
from .finite_algebra import (make_dual_numbers, make_field, make_prime_field,
                             make_square_zero, make_truncated,
                             truncated_generator)
from .genfun import (a_genfun, binomial_qseries_identity, check_duality,
                     check_recursion, convolve, epsilon_value, psi_char,
                     psi_inverse_char, q_eulerian, r_d_char,
                     r_d_via_convolution, r_genfun, series_coefficient)
from .polynomials import QPoly, QTPoly
from .ratfun import RatQT
from .repenum import (a_count, a_preproj, counterexample_counts,
                      fourier_fiber_count, m_count, m_preproj,
                      stabilizer_order, toric_ai_orbit_count, toric_point)
from .toric import (a_d_cyclic_closed_form, a_d_polynomial, r_d_polynomial,
                    toric_type_orbit_data)


def _qp(pairs):
    return QPoly(dict(pairs))


def _qt(triples):
    return QTPoly({(i, j): c for i, j, c in triples})


def _rat(triples, den):
    return RatQT(_qt(triples), den)


# -- exact polynomial identities -------------------------------------------

def check_polynomial_identities():
    checks = []
    checks.append(("A_2 of the triangle is q^2 + 6q + 5",
                   a_d_polynomial(cycle_graph(3), 2) == _qp({2: 1, 1: 6, 0: 5})))
    ok = True
    for n in range(1, 6):
        for d in range(1, 5):
            if a_d_polynomial(cycle_graph(n), d) != a_d_cyclic_closed_form(n, d):
                ok = False
    checks.append(("cycle closed form matches the subgraph sum, n <= 5, d <= 4", ok))
    ok = True
    for d in range(1, 7):
        expected = QPoly({d: 1, 0: 1, **{k: 2 for k in range(1, d)}})
        if a_d_polynomial(banana_graph(2), d) != expected:
            ok = False
        if a_d_cyclic_closed_form(2, d) != expected:
            ok = False
    checks.append(("double edge: A_d = q^d + 2q^(d-1) + ... + 2q + 1, d <= 6", ok))
    ok = True
    for m in range(0, 4):
        for d in range(1, 5):
            if a_d_polynomial(loops_graph(m), d) != QPoly.monomial(d * m):
                ok = False
    checks.append(("loop bouquets: A_d = q^(dm), m <= 3, d <= 4", ok))
    return checks


# -- generating function tables ---------------------------------------------

def _table_rows():
    q1 = [(0, 0, 1)]
    return [
        ("point", point_graph(),
         _rat(q1, {0: 1}), _rat(q1, {0: 1})),
        ("single loop", loops_graph(1),
         _rat([(0, 1, 1)], {0: 1, 1: 1}), _rat(q1, {1: 1})),
        ("single edge", path_graph(2),
         _rat([(0, 1, 1)], {0: 2}), _rat([(0, 1, 1)], {0: 2})),
        ("double edge", banana_graph(2),
         _rat([(0, 2, 1), (0, 1, 1)], {0: 2, 1: 1}),
         _rat([(1, 1, 1), (0, 1, 1)], {0: 1, 1: 1})),
        ("triple edge", banana_graph(3),
         _rat([(1, 3, 1), (1, 2, 2), (0, 2, 2), (0, 1, 1)], {0: 2, 1: 1, 2: 1}),
         _rat([(2, 1, 1), (1, 1, 1), (0, 1, 1)], {0: 1, 2: 1})),
        ("triangle", cycle_graph(3),
         _rat([(0, 3, 1), (0, 2, 4), (0, 1, 1)], {0: 3, 1: 1}),
         _rat([(1, 2, 2), (0, 2, 1), (1, 1, 1), (0, 1, 2)], {0: 2, 1: 1})),
    ]


_CYCLE_NUMERATORS = {
    2: [(1, 0, 1), (0, 0, 1)],
    3: [(1, 1, 2), (0, 1, 1), (1, 0, 1), (0, 0, 2)],
    4: [(1, 2, 3), (0, 2, 1), (1, 1, 8), (0, 1, 8), (1, 0, 1), (0, 0, 3)],
    5: [(1, 3, 4), (0, 3, 1), (1, 2, 33), (0, 2, 22), (1, 1, 22), (0, 1, 33),
        (1, 0, 1), (0, 0, 4)],
    6: [(1, 4, 5), (0, 4, 1), (1, 3, 104), (0, 3, 52), (1, 2, 198), (0, 2, 198),
        (1, 1, 52), (0, 1, 104), (1, 0, 1), (0, 0, 5)],
}

_QEULERIAN = {
    1: [(0, 0, 1)],
    2: [(1, 1, 1), (0, 0, 1)],
    3: [(3, 2, 1), (2, 1, 2), (1, 1, 2), (0, 0, 1)],
    4: [(6, 3, 1), (5, 2, 3), (4, 2, 5), (3, 2, 3), (3, 1, 3), (2, 1, 5),
        (1, 1, 3), (0, 0, 1)],
}


def check_genfun_tables():
    checks = []
    ok_r = ok_a = True
    for label, g, expected_r, expected_a in _table_rows():
        if r_genfun(g) != expected_r:
            ok_r = False
        if a_genfun(g) != expected_a:
            ok_a = False
    checks.append(("series table: all six R rows", ok_r))
    checks.append(("series table: all six A rows", ok_a))
    checks.append(("A(triangle) = ((2q+1)T^2 + (q+2)T) / ((1-T)^2 (1-qT))",
                   a_genfun(cycle_graph(3)) ==
                   _rat([(1, 2, 2), (0, 2, 1), (1, 1, 1), (0, 1, 2)], {0: 2, 1: 1})))
    ok = True
    for n, triples in _CYCLE_NUMERATORS.items():
        num = _qt(triples).shift(0, 1)
        if a_genfun(cycle_graph(n)) != RatQT(num, {0: n - 1, 1: 1}):
            ok = False
    checks.append(("cycle numerator table, n = 2..6", ok))
    ok = True
    for m, triples in _QEULERIAN.items():
        if q_eulerian(m) != _qt(triples):
            ok = False
    checks.append(("q-Eulerian numerators F_1..F_4", ok))
    checks.append(("T^2 coefficient of A(triangle) is q^2 + 6q + 5",
                   series_coefficient(a_genfun(cycle_graph(3)), 2) == _qp({2: 1, 1: 6, 0: 5})))
    checks.append(("T^2 coefficient of R(double edge) is q + 3",
                   series_coefficient(r_genfun(banana_graph(2)), 2) == _qp({1: 1, 0: 3})))
    checks.append(("coefficients of 1/(1-T) are all 1",
                   all(RatQT.geometric(0).series_coefficient(d) == QPoly.const(1)
                       for d in range(6))))
    return checks


# -- duality -----------------------------------------------------------------

def check_duality_battery(max_edges=4):
    checks = []
    graphs = all_connected_multigraphs(max_edges)
    ok_a = all(check_duality(g, "A") for g in graphs)
    ok_r = all(check_duality(g, "R") for g in graphs)
    checks.append(("inversion identity, A form, all connected graphs <= %d edges" % max_edges, ok_a))
    checks.append(("inversion identity, R form, all connected graphs <= %d edges" % max_edges, ok_r))
    ok = True
    for n in range(2, 6):
        f = a_genfun(cycle_graph(n))
        if f.invert_vars() != ((-1) ** (n % 2)) * f:
            ok = False
    checks.append(("cycle inversion sign (-1)^n, n = 2..5", ok))
    return checks


# -- recursion and convolution calculus ---------------------------------------

def check_recursion_battery(max_edges=4):
    graphs = all_connected_multigraphs(max_edges)
    ok = all(check_recursion(g) for g in graphs)
    return [("one-step recursion for R, all connected graphs <= %d edges" % max_edges, ok)]


def check_hopf(max_edges=4):
    checks = []
    graphs = all_connected_multigraphs(max_edges)
    ok = True
    for d in range(0, 5):
        step = convolve(psi_char(d), r_d_char(d))
        for g in graphs:
            if step(g) != r_d_polynomial(g, d + 1):
                ok = False
    checks.append(("R_(d+1) equals psi(q^d) * R_d, d <= 4", ok))
    ok = True
    for d in range(1, 5):
        for g in graphs:
            if r_d_via_convolution(g, d) != r_d_polynomial(g, d):
                ok = False
    checks.append(("R_d as an iterated psi convolution, d <= 4", ok))
    inv = convolve(psi_inverse_char(1), psi_char(1))
    ok = all(inv(g) == QPoly.const(epsilon_value(g)) for g in graphs)
    checks.append(("signed psi is the convolution inverse of psi", ok))
    doubling = convolve(psi_char(0), psi_char(0))
    ok = all(doubling(g) == QPoly.const(2 ** g.edge_count()) for g in graphs)
    checks.append(("(1 * 1)(Gamma) counts the 2^#E edge subsets", ok))
    ok = all(binomial_qseries_identity(m) for m in range(1, 5))
    checks.append(("binomial series identity for loop bouquets, m <= 4", ok))
    return checks


# -- Tutte specializations ----------------------------------------------------

def check_tutte(max_edges=5):
    checks = []
    graphs = all_connected_multigraphs(max_edges)
    qv = QPoly.q()
    ok = all(a_d_polynomial(g, 1) == g.tutte().evaluate(1, qv) for g in graphs)
    checks.append(("A_1 equals the Tutte polynomial at (1, q)", ok))
    ok = all(r_d_polynomial(g, 2) == g.tutte().evaluate(2, qv + 1) for g in graphs)
    checks.append(("R_2 equals the Tutte polynomial at (2, q+1)", ok))
    diff = (r_genfun(banana_graph(2)) - r_genfun(path_graph(2)) - r_genfun(loops_graph(1)))
    expected = RatQT(_qt([(1, 2, 1), (0, 2, 2), (0, 1, -1)]), {0: 2, 1: 1})
    checks.append(("deletion-contraction defect of the double edge", diff == expected))
    checks.append(("defect series: T^2 coefficient vanishes",
                   diff.series_coefficient(2) == QPoly()))
    checks.append(("defect series: T^3 coefficient is 2q + 1",
                   diff.series_coefficient(3) == _qp({1: 2, 0: 1})))
    checks.append(("defect series: T^4 coefficient is 2q^2 + 4q + 2",
                   diff.series_coefficient(4) == _qp({2: 2, 1: 4, 0: 2})))
    return checks


# -- structural properties ----------------------------------------------------

def check_structural(samples=50, seed=20240229, max_d=4):
    """Degree, leading coefficient, positivity and pole-order laws over a
    random sample.

    The leading coefficient of A_d and R_d is d^(number of bridges): the
    depth of a bridge never moves b1, so bridge depths are free in the
    top-degree terms.  Monic therefore means bridgeless (or d = 1), which
    is also forced by R_2 = T(2, q+1), where bridges contribute a factor
    x = 2.  The blanket monicity claim holds on the bridgeless part of the
    sample and the refined law is asserted everywhere.
    """
    rng = random.Random(seed)
    ok_lead_a = ok_value_at_one = ok_r = ok_vanish = True
    for _ in range(samples):
        g = random_connected_multigraph(rng, max_edges=5)
        b1 = g.b1()
        bridges = g.bridge_count()
        trees = g.spanning_tree_count()
        for d in range(1, max_d + 1):
            a = a_d_polynomial(g, d)
            if b1 > 0:
                if a.degree() != d * b1 or a.leading_coefficient() != d ** bridges:
                    ok_lead_a = False
                if bridges == 0 and not a.is_monic():
                    ok_lead_a = False
            elif a != QPoly.const(d ** (g.n - 1)):
                ok_lead_a = False
            if a(1) != d ** (g.n - 1) * trees:
                ok_value_at_one = False
            r = r_d_polynomial(g, d)
            if any(c < 0 for c in r.coeffs.values()):
                ok_r = False
            if b1 > 0 and (r.degree() != (d - 1) * b1
                           or r.leading_coefficient() != (d ** bridges if d > 1 else 1)):
                ok_r = False
            if b1 > 0 and bridges == 0 and not r.is_monic():
                ok_r = False
        f = r_genfun(g)
        if f.numerator_t_degree() >= f.den_t_degree():
            ok_vanish = False
    return [
        ("A_d degree d*b1, leading coefficient d^bridges (monic when bridgeless)", ok_lead_a),
        ("A_d at q = 1 counts spanning trees times d^(n-1)", ok_value_at_one),
        ("R_d non-negative, degree (d-1)*b1, leading coefficient d^bridges", ok_r),
        ("R numerator T-degree below denominator T-degree", ok_vanish),
    ]


# -- toric brute-force oracle -------------------------------------------------

def check_toric_oracle():
    quivers = [("A2", path_quiver(2)), ("path3", path_quiver(3)),
               ("C2", banana_quiver(2)), ("C3", cycle_quiver(3)),
               ("S1", jordan_quiver(1)), ("S2", jordan_quiver(2))]
    checks = []
    ok = True
    for q, d in [(2, 2), (3, 2), (2, 3)]:
        ring = make_truncated(make_prime_field(q), d)
        for label, quiver in quivers:
            expected = a_d_polynomial(quiver.graph, d)(q)
            got = toric_ai_orbit_count(quiver, ring)
            if got != expected:
                ok = False
    checks.append(("orbit partition matches A_d at q for six quivers, three (q, d)", ok))
    ring = make_truncated(make_prime_field(2), 2)
    checks.append(("triangle over k_2(F_2) has 21 classes",
                   toric_ai_orbit_count(cycle_quiver(3), ring) == 21))
    return checks


# -- the depth-type orbit table ----------------------------------------------

def _orbit_table_rows():
    tri = cycle_graph(3)
    two = tri.spanning_subgraph([1, 2])
    qm1 = _qp({1: 1, 0: -1})
    q = QPoly.q()
    rows = [
        (tri, {1: 2, 2: 2, 3: 2}, 1, q * qm1, q ** 3 * qm1 ** 3, q * qm1),
        (tri, {1: 2, 2: 2, 3: 1}, 3, q * qm1, q ** 2 * qm1 ** 3, qm1),
        (tri, {1: 2, 2: 1, 3: 1}, 3, q ** 2 * qm1, q * qm1 ** 3, qm1),
        (tri, {1: 1, 2: 1, 3: 1}, 1, q ** 3 * qm1, qm1 ** 3, QPoly.const(1) * qm1),
        (two, {1: 2, 2: 2}, 3, q * qm1, q ** 2 * qm1 ** 2, QPoly.const(1)),
        (two, {1: 2, 2: 1}, 6, q ** 2 * qm1, q * qm1 ** 2, QPoly.const(1)),
        (two, {1: 1, 2: 1}, 3, q ** 3 * qm1, qm1 ** 2, QPoly.const(1)),
    ]
    return rows


def check_orbit_table():
    checks = []
    ok = True
    total = QPoly()
    for g, r, mult, stab, reps, orbits in _orbit_table_rows():
        got = toric_type_orbit_data(g, r, 2)
        if got != (stab, reps, orbits):
            ok = False
        total = total + orbits * mult
    checks.append(("all seven depth-type rows for the triangle at d = 2", ok))
    checks.append(("row multiplicities resum to q^2 + 6q + 5",
                   total == _qp({2: 1, 1: 6, 0: 5})))
    ring = make_truncated(make_prime_field(2), 2)
    quiver = cycle_quiver(3)
    ones = toric_point(quiver, {e: ring.one for e in (1, 2, 3)})
    t = truncated_generator(ring)
    ts = toric_point(quiver, {e: t for e in (1, 2, 3)})
    checks.append(("stabilizer of the all-units point at q = 2 is q(q-1) = 2",
                   stabilizer_order(ones, quiver, ring, (1, 1, 1)) == 2))
    checks.append(("stabilizer of the all-t point at q = 2 is q^3(q-1) = 8",
                   stabilizer_order(ts, quiver, ring, (1, 1, 1)) == 8))
    return checks


# -- orientation independence --------------------------------------------------

def _m_orientation_grid():
    f2 = make_prime_field(2)
    rings = [f2, make_truncated(f2, 2), make_truncated(f2, 3),
             make_truncated(make_prime_field(3), 2)]
    small = {rings[0].name, rings[1].name}
    grid = []
    for ring in rings:
        big_ok = ring.name in small
        grid.append((path_quiver(2), ring, [(1, 1), (2, 1)] + ([(2, 2)] if big_ok else [])))
        grid.append((path_quiver(3), ring, [(1, 1, 1)] + ([(1, 2, 1)] if big_ok else [])))
        grid.append((banana_quiver(2), ring, [(1, 1)] + ([(2, 2)] if big_ok else [])))
    return grid


def check_orientation():
    checks = []
    ok = True
    for quiver, ring, ranks in _m_orientation_grid():
        for alpha in ranks:
            values = {m_count(variant, ring, alpha)
                      for variant in quiver.all_orientations()}
            if len(values) != 1:
                ok = False
    checks.append(("class counts agree across all orientations (three quivers, four rings)", ok))

    ok = True
    f3 = make_prime_field(3)
    k2f3 = make_truncated(f3, 2)
    a_grid = [
        (path_quiver(2), f3, (1, 1)),
        (path_quiver(2), k2f3, (1, 1)),
        (banana_quiver(2), k2f3, (1, 1)),
        (path_quiver(3), k2f3, (1, 1, 0)),
        (path_quiver(3), make_truncated(make_field(4), 2), (1, 1, 1)),
        (path_quiver(3), make_truncated(make_prime_field(7), 2), (1, 1, 1)),
    ]
    for quiver, ring, alpha in a_grid:
        values = {a_count(variant, ring, alpha)
                  for variant in quiver.all_orientations()}
        if len(values) != 1:
            ok = False
    checks.append(("absolutely indecomposable counts agree across orientations", ok))
    return checks


# -- preprojective correspondence ----------------------------------------------

def check_preprojective():
    checks = []
    f2 = make_prime_field(2)
    f3 = make_prime_field(3)
    k2f2 = make_truncated(f2, 2)
    m_grid = [
        ("Jordan loop over F_2", jordan_quiver(1), f2, (1,)),
        ("Jordan loop over F_3", jordan_quiver(1), f3, (1,)),
        ("A2 over F_2", path_quiver(2), f2, (1, 1)),
        ("A2 over k_2(F_2)", path_quiver(2), k2f2, (1, 1)),
        ("A3 over F_2", path_quiver(3), f2, (1, 1, 1)),
    ]
    ok = True
    for label, quiver, ring, alpha in m_grid:
        lhs = m_preproj(quiver, ring, alpha)
        rhs = m_count(quiver, make_dual_numbers(ring), alpha)
        if lhs != rhs:
            ok = False
    checks.append(("preprojective class count equals the dual-number count (5 cases)", ok))

    lhs = a_preproj(path_quiver(2), f3, (1, 1))
    rhs = a_count(path_quiver(2), make_dual_numbers(f3), (1, 1))
    checks.append(("A2 over F_3: absolutely indecomposable sides agree and equal 2",
                   lhs == rhs == 2))
    f4 = make_field(4)
    lhs = a_preproj(path_quiver(3), f4, (1, 1, 1))
    rhs = a_count(path_quiver(3), make_dual_numbers(f4), (1, 1, 1))
    checks.append(("A3 over F_4: absolutely indecomposable sides agree and equal 4",
                   lhs == rhs == 4))
    return checks


# -- zero-fiber count identity ---------------------------------------------------

def check_fourier():
    checks = []
    f2 = make_prime_field(2)
    f3 = make_prime_field(3)
    k2f2 = make_truncated(f2, 2)
    checks.append(("A2 over F_2: zero fiber has 3 points",
                   fourier_fiber_count(path_quiver(2), f2, (1, 1)) == 3))
    checks.append(("A2 over k_2(F_2): zero fiber has 8 points",
                   fourier_fiber_count(path_quiver(2), k2f2, (1, 1)) == 8))
    checks.append(("Jordan loop over F_2: zero fiber is everything (4)",
                   fourier_fiber_count(jordan_quiver(1), f2, (1,)) == 4))
    checks.append(("Jordan loop over F_3: zero fiber is everything (9)",
                   fourier_fiber_count(jordan_quiver(1), f3, (1,)) == 9))
    return checks


# -- the non-self-dual counterexample ---------------------------------------------

def check_counterexample():
    checks = []
    ok = True
    for n, q in [(1, 2), (1, 3), (2, 2), (2, 3)]:
        a, b = counterexample_counts(n, q)
        if b - a != (q ** n - 1) * (q ** (n - 1) - 1):
            ok = False
        if (a == b) != (n == 1):
            ok = False
    checks.append(("defect formula at (n, q) in {1,2} x {2,3}", ok))
    checks.append(("(n, q) = (2, 2) gives (15, 18)",
                   counterexample_counts(2, 2) == (15, 18)))
    return checks


# -- small count tables ------------------------------------------------------------

def check_count_tables():
    checks = []
    f3 = make_prime_field(3)
    ok = True
    for d in range(1, 4):
        ring = make_truncated(f3, d)
        if a_count(path_quiver(2), ring, (1, 1)) != d:
            ok = False
    checks.append(("A2 over k_d(F_3): d classes of rank (1,1), d = 1..3", ok))
    checks.append(("A3 over k_2(F_4): 4 classes of rank (1,1,1)",
                   a_count(path_quiver(3), make_truncated(make_field(4), 2), (1, 1, 1)) == 4))
    checks.append(("A3 over k_2(F_7): 4 classes of rank (1,1,1)",
                   a_count(path_quiver(3), make_truncated(make_prime_field(7), 2), (1, 1, 1)) == 4))
    checks.append(("A3 over k_2(F_3): 2 classes of rank (1,1,0)",
                   a_count(path_quiver(3), make_truncated(f3, 2), (1, 1, 0)) == 2))
    return checks


def check_count_tables_slow():
    ring = make_truncated(make_prime_field(5), 2)
    value = a_count(path_quiver(3), ring, (1, 2, 1), guard=1 << 40)
    return [("A3 over k_2(F_5): 1 class of rank (1,2,1)", value == 1)]


# -- self-duality detection ----------------------------------------------------------

def check_frobenius():
    checks = []
    f2 = make_prime_field(2)
    ok = all(make_truncated(f2, d).find_frobenius_form() is not None for d in range(1, 4))
    checks.append(("truncated rings k_d(F_2), d <= 3, admit a non-degenerate form", ok))
    checks.append(("dual numbers F_2[eps] admit a non-degenerate form",
                   make_dual_numbers(f2).find_frobenius_form() is not None))
    checks.append(("k_2(F_2)[eps] admits a non-degenerate form",
                   make_dual_numbers(make_truncated(f2, 2)).find_frobenius_form() is not None))
    checks.append(("square-zero ring with 2 generators admits none",
                   make_square_zero(f2, 2).find_frobenius_form() is None))
    checks.append(("square-zero ring with 3 generators admits none",
                   make_square_zero(f2, 3).find_frobenius_form() is None))
    return checks


SUITES = {
    "duality": [check_duality_battery],
    "recursion": [check_recursion_battery, check_hopf],
    "tutte": [check_tutte],
    "orientation": [check_orientation],
    "preprojective": [check_preprojective],
    "fourier": [check_fourier],
    "tables": [check_polynomial_identities, check_genfun_tables,
               check_orbit_table, check_count_tables],
    "counterexample": [check_counterexample],
}

EXTRA = [check_structural, check_toric_oracle, check_frobenius]


def run_suite(name, slow=False):
    """Run a named suite; returns a list of (label, passed)."""
    if name == "all":
        fns = []
        seen = set()
        for group in SUITES.values():
            for fn in group:
                if fn not in seen:
                    seen.add(fn)
                    fns.append(fn)
        fns.extend(EXTRA)
    else:
        fns = SUITES[name]
    results = []
    for fn in fns:
        results.extend(fn())
    if slow and name in ("tables", "all"):
        results.extend(check_count_tables_slow())
    return results
