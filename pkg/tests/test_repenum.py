import pytest

from quivercount.families import (banana_quiver, cycle_quiver, jordan_quiver,
                                  path_quiver)
from quivercount.finite_algebra import (make_dual_numbers, make_field,
                                        make_prime_field, make_square_zero,
                                        make_truncated, mat_identity,
                                        truncated_generator)
from quivercount.multigraph import GuardError
from quivercount.repenum import (a_count, a_preproj, counterexample_counts,
                                 double_quiver, enumerate_group, fix_count,
                                 fourier_fiber_count, gl_elements, gl_order,
                                 group_order, m_count, m_preproj, moment_map,
                                 preproj_orbit_partition, stabilizer_order,
                                 toric_ai_orbit_count, toric_point)

F2 = make_prime_field(2)
F3 = make_prime_field(3)
K2F2 = make_truncated(F2, 2)


def test_group_orders():
    assert group_order(path_quiver(2), K2F2, (1, 1)) == 4
    assert group_order(jordan_quiver(1), F3, (1,)) == 2
    assert group_order(path_quiver(3), K2F2, (1, 1, 1)) == 8
    assert gl_order(F2, 2) == 6
    assert gl_order(K2F2, 2) == 96
    assert gl_order(F3, 2) == 48
    assert gl_order(F2, 0) == 1


def test_enumerate_group():
    elems = list(enumerate_group(path_quiver(2), K2F2, (1, 1)))
    assert len(elems) == 4 and len(set(elems)) == 4
    assert len(gl_elements(F2, 2)) == 6
    with pytest.raises(GuardError):
        list(enumerate_group(path_quiver(2), K2F2, (2, 2), guard=10))


def test_fix_count_examples():
    a2 = path_quiver(2)
    one = ((F2.one,),)
    assert fix_count((one, one), a2, F2, (1, 1)) == 2
    k_one = ((K2F2.one,),)
    k_u = (((1, 1),),)
    # identity fixes everything
    assert fix_count((k_one, k_one), a2, K2F2, (1, 1)) == 4
    # (1, 1+t): fixed points form the annihilator of t
    assert fix_count((k_one, k_u), a2, K2F2, (1, 1)) == 2
    ident2 = mat_identity(K2F2, 2)
    assert fix_count((ident2, ident2), a2, K2F2, (2, 2)) == 4 ** 4


def test_m_count_values():
    a2 = path_quiver(2)
    for q, d in [(2, 2), (3, 2), (2, 3)]:
        ring = make_truncated(make_prime_field(q), d)
        assert m_count(a2, ring, (1, 1)) == d + 1
    for q in (2, 3):
        ring = make_prime_field(q)
        assert m_count(jordan_quiver(1), ring, (1,)) == q
    lhs = m_count(path_quiver(3), K2F2, (1, 1, 1))
    rhs = m_count(path_quiver(3).flip([2]), K2F2, (1, 1, 1))
    assert lhs == rhs


def test_a_count_values():
    a2 = path_quiver(2)
    for d in (1, 2, 3):
        ring = make_truncated(F3, d)
        assert a_count(a2, ring, (1, 1)) == d
    ring = make_truncated(make_field(4), 2)
    assert a_count(path_quiver(3), ring, (1, 1, 1)) == 4
    for q, d in [(2, 2), (3, 2)]:
        ring = make_truncated(make_prime_field(q), d)
        assert a_count(jordan_quiver(1), ring, (1,)) == q ** d


def test_a_count_generator_independence():
    ring = make_truncated(make_field(4), 2)
    default = a_count(path_quiver(3), ring, (1, 1, 1))
    field = ring.residue_field
    gens = [x for x in field.elements() if any(x)]
    alternative = None
    for x in gens:
        value, k = x, 1
        while value != field.one:
            value = field.mul(value, x)
            k += 1
        if k == field.size() - 1 and x != ring.primitive_element():
            alternative = x
            break
    assert alternative is not None
    assert a_count(path_quiver(3), ring, (1, 1, 1), generator=alternative) == default


def test_a_count_requires_roots_of_unity():
    with pytest.raises(ValueError):
        a_count(path_quiver(2), F2, (1, 1))     # |alpha| = 2, q - 1 = 1
    with pytest.raises(ValueError):
        a_count(path_quiver(2), F3, (1, 2))     # |alpha| = 3, q - 1 = 2


def test_a_at_most_m():
    grid = [
        (path_quiver(2), make_truncated(F3, 2), (1, 1)),
        (banana_quiver(2), make_truncated(F3, 2), (1, 1)),
        (path_quiver(3), make_truncated(make_field(4), 2), (1, 1, 1)),
        (jordan_quiver(1), F3, (1,)),
    ]
    for quiver, ring, alpha in grid:
        assert 0 <= a_count(quiver, ring, alpha) <= m_count(quiver, ring, alpha)


def test_rank_vector_validation():
    with pytest.raises(ValueError):
        m_count(path_quiver(2), F2, (0, 0))
    with pytest.raises(ValueError):
        m_count(path_quiver(2), F2, (1,))
    with pytest.raises(ValueError):
        m_count(path_quiver(2), F2, (1, -1))


def test_moment_map_examples():
    a2 = path_quiver(2)
    _, star = double_quiver(a2)
    assert star == {1: 2}
    x_val, y_val = (1, 0), (1, 1)
    x = {1: ((x_val,),), 2: ((y_val,),)}
    value = moment_map(a2, K2F2, (1, 1), x)
    yx = K2F2.mul(y_val, x_val)
    assert value[0] == ((K2F2.neg(yx),),)
    assert value[1] == ((yx,),)
    zero = {1: ((K2F2.zero(),),), 2: ((K2F2.zero(),),)}
    value = moment_map(a2, K2F2, (1, 1), zero)
    assert all(entry == K2F2.zero() for block in value for row in block for entry in row)
    with pytest.raises(ValueError):
        moment_map(a2, K2F2, (1, 1), {1: ((x_val,), (y_val,)), 2: ((y_val,),)})


def test_preprojective_counts():
    a2 = path_quiver(2)
    assert m_preproj(a2, F2, (1, 1)) == 3
    for q in (2, 3):
        ring = make_prime_field(q)
        assert m_preproj(jordan_quiver(1), ring, (1,)) == q ** 2
        assert a_preproj(jordan_quiver(1), ring, (1,)) == q ** 2
    assert m_preproj(a2, make_square_zero(F2, 2), (1, 1)) == 18
    assert a_preproj(a2, F3, (1, 1)) == a_count(a2, make_dual_numbers(F3), (1, 1)) == 2


def test_preproj_partition_fallback_agrees():
    cases = [
        (path_quiver(2), F2, (1, 1)),
        (path_quiver(2), F3, (1, 1)),
        (path_quiver(2), K2F2, (1, 1)),
        (jordan_quiver(1), F2, (1,)),
        (path_quiver(3), F2, (1, 1, 1)),
    ]
    for quiver, ring, alpha in cases:
        assert preproj_orbit_partition(quiver, ring, alpha) == \
            m_preproj(quiver, ring, alpha)
    with pytest.raises(GuardError):
        preproj_orbit_partition(path_quiver(2), K2F2, (1, 1), guard_points=10)


def test_fourier_fiber_counts():
    assert fourier_fiber_count(path_quiver(2), F2, (1, 1)) == 3
    assert fourier_fiber_count(path_quiver(2), K2F2, (1, 1)) == 8
    assert fourier_fiber_count(jordan_quiver(1), F2, (1,)) == 4
    assert fourier_fiber_count(jordan_quiver(1), F3, (1,)) == 9
    with pytest.raises(GuardError):
        fourier_fiber_count(path_quiver(2), K2F2, (1, 1), guard_points=10)


def test_toric_orbit_counts():
    assert toric_ai_orbit_count(cycle_quiver(3), K2F2) == 21
    assert toric_ai_orbit_count(banana_quiver(2), K2F2) == 9
    # trees: d classes per edge chain with full support
    for q, d in [(2, 2), (3, 2), (2, 3)]:
        ring = make_truncated(make_prime_field(q), d)
        assert toric_ai_orbit_count(path_quiver(2), ring) == d
    # without the connectivity filter every class is counted
    assert toric_ai_orbit_count(path_quiver(2), K2F2, connected_only=False) == 3
    with pytest.raises(GuardError):
        toric_ai_orbit_count(cycle_quiver(3), K2F2, guard_points=10)


def test_stabilizer_orders():
    tri = cycle_quiver(3)
    ones = toric_point(tri, {1: K2F2.one, 2: K2F2.one, 3: K2F2.one})
    assert stabilizer_order(ones, tri, K2F2, (1, 1, 1)) == 2
    t = truncated_generator(K2F2)
    ts = toric_point(tri, {1: t, 2: t, 3: t})
    assert stabilizer_order(ts, tri, K2F2, (1, 1, 1)) == 8
    zero = toric_point(tri, {e: K2F2.zero() for e in (1, 2, 3)})
    assert stabilizer_order(zero, tri, K2F2, (1, 1, 1)) == 8


def test_counterexample_counts():
    for q in (2, 3):
        a, b = counterexample_counts(1, q)
        assert a == b == q + 4
    assert counterexample_counts(2, 2) == (15, 18)
    a, b = counterexample_counts(2, 3)
    assert b - a == (9 - 1) * (3 - 1)


def test_group_guard():
    with pytest.raises(GuardError):
        m_count(path_quiver(2), K2F2, (2, 2), guard=10)


def test_random_graphs_cross_validate_closed_form():
    import random

    from quivercount.families import random_connected_multigraph
    from quivercount.multigraph import Quiver
    from quivercount.toric import a_d_polynomial

    rng = random.Random(424242)
    tested = 0
    for _ in range(10):
        g = random_connected_multigraph(rng, max_edges=4)
        quiver = Quiver(g, {e: (u, v) for e, u, v in g.edges})
        for q, d in [(2, 2), (2, 3), (3, 2)]:
            ring = make_truncated(make_prime_field(q), d)
            if ring.size() ** g.edge_count() > 1 << 13 or ring.unit_count() ** g.n > 3000:
                continue
            assert toric_ai_orbit_count(quiver, ring) == a_d_polynomial(g, d)(q)
            tested += 1
    assert tested >= 20
