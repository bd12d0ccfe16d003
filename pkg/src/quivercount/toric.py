"""Closed-form counting of absolutely indecomposable rank-one ("toric")
representations over truncated polynomial rings F_q[t]/(t^d).

The combinatorial type of a toric representation is a pair (gamma, r):
gamma the connected support subgraph and r a depth function assigning
each edge an integer 1..d (r records the annihilator exponent of the
edge value).  Per-type orbit data and the polynomials A_d and R_d are
computed exactly in q.
"""

from itertools import product

from .multigraph import GuardError, Multigraph
from .polynomials import QPoly

GUARD_TERMS = 1 << 24


def check_depth_function(gamma, r, d):
    ids = set(gamma.edge_ids())
    if set(r) != ids:
        raise ValueError("depth function must be total on the edges")
    for e, value in r.items():
        if not 1 <= value <= d:
            raise ValueError("depth value r(%d) = %r outside 1..%d" % (e, value, d))


def contraction_b1_table(gamma):
    """Map frozenset(contracted edges) -> b1 of the contraction."""
    ids = sorted(gamma.edge_ids())
    table = {}
    for mask in range(1 << len(ids)):
        subset = frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)
        table[subset] = gamma.b1_of_contraction(subset)
    return table


def delta(gamma, r, d, _table=None):
    """sum over k = 1..d-1 of b1(gamma) - b1(gamma_k), where gamma_k
    contracts the edges of depth > k."""
    if not gamma.is_connected():
        raise ValueError("gamma must be connected")
    check_depth_function(gamma, r, d)
    b1 = gamma.b1()
    total = 0
    for k in range(1, d):
        deep = frozenset(e for e, value in r.items() if value > k)
        b1_k = _table[deep] if _table is not None else gamma.b1_of_contraction(deep)
        total += b1 - b1_k
    return total


def r_d_polynomial(gamma, d, guard=GUARD_TERMS):
    """sum over all depth functions r of q^delta(gamma, r).

    Monic of degree (d-1) * b1(gamma) with non-negative coefficients;
    d = 0 returns the counit value (1 iff gamma is a single vertex).
    """
    if not gamma.is_connected():
        raise ValueError("gamma must be connected")
    if d < 0:
        raise ValueError("d >= 0 required")
    if d == 0:
        return QPoly.const(1 if gamma.edge_count() == 0 else 0)
    return _r_d_sum(gamma, d, guard)


def _r_d_sum(gamma, d, guard=GUARD_TERMS):
    ids = sorted(gamma.edge_ids())
    m = len(ids)
    if d ** m > guard:
        raise GuardError("d^|E| = %d^%d exceeds guard" % (d, m))
    if m == 0:
        return QPoly.const(1)
    table = contraction_b1_table(gamma)
    b1 = table[frozenset()]
    counts = {}
    for values in product(range(1, d + 1), repeat=m):
        exp = 0
        for k in range(1, d):
            deep = frozenset(ids[i] for i in range(m) if values[i] > k)
            exp += b1 - table[deep]
        counts[exp] = counts.get(exp, 0) + 1
    return QPoly(counts)


def r_d_on_components(g, d, guard=GUARD_TERMS):
    """R_d extended multiplicatively to arbitrary multigraphs."""
    labels = g.component_labels()
    out = QPoly.const(1)
    for rep in sorted(set(labels.values())):
        verts = sorted(v for v, r in labels.items() if r == rep)
        relabel = {v: i + 1 for i, v in enumerate(verts)}
        edges = [(e, relabel[u], relabel[v]) for e, u, v in g.edges if u in relabel]
        comp = Multigraph(len(verts), edges)
        out = out * r_d_polynomial(comp, d, guard)
        if not out:
            return out
    return out


def a_d_polynomial(graph, d, guard=GUARD_TERMS):
    """Number of isomorphism classes of absolutely indecomposable toric
    representations over F_q[t]/(t^d), as an exact polynomial in q.

    Sums (q-1)^b1(gamma) * R_d(gamma) over connected spanning subgraphs;
    monic of degree d * b1(graph).  d = 0 returns 1 iff every edge is a
    loop (the one-vertex classes).
    """
    if not graph.is_connected():
        raise ValueError("graph must be connected")
    if d < 0:
        raise ValueError("d >= 0 required")
    if d == 0:
        all_loops = all(graph.is_loop(e) for e in graph.edge_ids())
        return QPoly.const(1 if all_loops else 0)
    qm1 = QPoly({1: 1, 0: -1})
    total = QPoly()
    for subset in graph.connected_spanning_subgraphs():
        sub = graph.spanning_subgraph(subset)
        total = total + qm1 ** sub.b1() * _r_d_sum(sub, d, guard)
    return total


def a_d_cyclic_closed_form(n, d):
    """Closed form for the cycle C_n over F_q[t]/(t^d):
    q^d + sum_{k=1}^{d-1} [(d-k+1)^n - 2(d-k)^n + (d-k-1)^n] q^k
        + [-d^n + (d-1)^n + n d^(n-1)].
    """
    if n < 1 or d < 1:
        raise ValueError("n >= 1 and d >= 1 required")
    coeffs = {d: 1}
    for k in range(1, d):
        x = d - k
        coeffs[k] = coeffs.get(k, 0) + (x + 1) ** n - 2 * x ** n + (x - 1) ** n
    coeffs[0] = coeffs.get(0, 0) + (-(d ** n) + (d - 1) ** n + n * d ** (n - 1))
    return QPoly(coeffs)


def toric_type_orbit_data(gamma, r, d, q=None):
    """Stabilizer order, representation count and orbit count for the
    combinatorial type (gamma, r) at depth d.

    With q = None the three values are returned as polynomials in q;
    with an explicit prime power they are exact integers and the orbit
    count is asserted to divide out evenly.
    """
    if not gamma.is_connected():
        raise ValueError("gamma must be connected")
    check_depth_function(gamma, r, d)
    ids = sorted(gamma.edge_ids())
    n = gamma.n
    b1 = gamma.b1()
    m = len(ids)

    dtilde = 0
    delta_simplified = 0
    delta_unsimplified = 0
    prev_size = 0
    for k in range(1, d + 1):
        shallow = [e for e in ids if r[e] <= k]
        delta_unsimplified += (k - 1) * (len(shallow) - prev_size)
        prev_size = len(shallow)
        if k <= d - 1:
            deep = frozenset(e for e in ids if r[e] > k)
            b1_k = gamma.b1_of_contraction(deep)
            dtilde += len(shallow) - b1_k
            delta_simplified += b1 - b1_k
            delta_unsimplified += len(shallow) - b1_k - n + 1
    # Built-in consistency check of the delta simplification.
    assert delta_simplified == delta_unsimplified, (delta_simplified, delta_unsimplified)

    qm1 = QPoly({1: 1, 0: -1})
    stab = QPoly.monomial(dtilde + d - 1) * qm1
    reps = qm1 ** m * QPoly.monomial(sum(r[e] - 1 for e in ids))
    orbits = qm1 ** b1 * QPoly.monomial(delta_simplified)
    if q is None:
        return stab, reps, orbits
    stab_v, reps_v = stab(q), reps(q)
    group = (q ** (d - 1) * (q - 1)) ** n
    if (reps_v * stab_v) % group:
        raise AssertionError("orbit count is not integral; inconsistent type data")
    orbits_v = reps_v * stab_v // group
    assert orbits_v == orbits(q)
    return stab_v, reps_v, orbits_v
