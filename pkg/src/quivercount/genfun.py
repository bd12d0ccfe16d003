"""Rational generating functions for the toric counting polynomials and
the convolution calculus of multiplicative graph invariants.

R(gamma, q, T) collects the depth-d counts R_d as a power series in T and
is computed exactly as a sum over strict filtrations of the edge set;
A(graph, q, T) adds the (q-1)^b1 weights over connected spanning
subgraphs.  Both satisfy an inversion identity under
(q, T) -> (1/q, 1/T), verified here by exact substitution.

Characters are functions on multigraphs, multiplicative over disjoint
union and one-point join, with convolution
(f * g)(Gamma) = sum over edge subsets A of f(Gamma[A]) * g(Gamma/A).
"""

from collections import Counter
from math import comb

from .multigraph import GuardError, strict_filtrations
from .polynomials import QPoly, QTPoly
from .ratfun import RatQT
from .toric import r_d_on_components, r_d_polynomial

GUARD_SUBSETS = 20


def epsilon_value(g):
    """Counit: 1 iff the graph has no edges (the class of the point)."""
    return 1 if g.edge_count() == 0 else 0


def epsilon1_value(g):
    """1 iff every edge is a loop (the class of the one-vertex graphs S_m)."""
    return 1 if all(g.is_loop(e) for e in g.edge_ids()) else 0


def cvector_of_filtration(gamma, chain):
    """c-vector (c_0, ..., c_l) of a strict filtration, c_0 = 0 and
    c_i = b1(gamma) - b1(Lambda_i) where Lambda_i contracts everything
    outside F_{i-1}."""
    if not gamma.is_connected():
        raise ValueError("gamma must be connected")
    ids = frozenset(gamma.edge_ids())
    prev = frozenset()
    for step in chain:
        if not (prev < step <= ids):
            raise ValueError("not a strict filtration of the edge set")
        prev = step
    if chain and chain[-1] != ids or (not chain and ids):
        raise ValueError("filtration must end at the full edge set")
    b1 = gamma.b1()
    cs = [0]
    for i in range(1, len(chain) + 1):
        outside = ids - (chain[i - 2] if i >= 2 else frozenset())
        cs.append(b1 - gamma.b1_of_contraction(outside))
    return tuple(cs)


def r_of_cvector(c):
    """q^(c_2 + ... + c_l) T^l / prod_i (1 - q^(c_i) T); the degenerate
    length-one vector (0,) gives 1/(1-T)."""
    if not c or c[0] != 0 or any(x < 0 for x in c):
        raise ValueError("c-vector must start with 0 and be non-negative")
    l = len(c) - 1
    num = QTPoly.monomial(sum(c[2:]), l)
    den = Counter(c)
    return RatQT(num, den)


def r_genfun(gamma, guard=GUARD_SUBSETS):
    """R(gamma, q, T) as an exact rational function: the sum of
    R(c(F), q, T) over all strict filtrations F of the edge set."""
    if not gamma.is_connected():
        raise ValueError("gamma must be connected")
    weights = Counter()
    for chain in strict_filtrations(gamma.edge_ids(), guard=guard):
        weights[cvector_of_filtration(gamma, chain)] += 1
    total = RatQT.zero()
    for c in sorted(weights):
        total = total + weights[c] * r_of_cvector(c)
    return total


def a_genfun(graph, guard=GUARD_SUBSETS):
    """A(graph, q, T) = sum over connected spanning subgraphs of
    (q-1)^b1 * R(subgraph, q, T)."""
    if not graph.is_connected():
        raise ValueError("graph must be connected")
    qm1 = QPoly({1: 1, 0: -1})
    total = RatQT.zero()
    for subset in graph.connected_spanning_subgraphs(guard=guard):
        sub = graph.spanning_subgraph(subset)
        total = total + r_genfun(sub, guard=guard) * qm1 ** sub.b1()
    return total


def series_coefficient(f, d):
    """Coefficient of T^d in the expansion of f at T = 0, as a QPoly."""
    return f.series_coefficient(d)


class GraphChar:
    """A multiplicative graph invariant valued in Laurent polynomials in q.

    Memoized on the exact labeled graph; correctness never depends on the
    memo, which only avoids recomputing repeated subgraph evaluations.
    """

    __slots__ = ("name", "fn", "_memo")

    def __init__(self, name, fn):
        self.name = name
        self.fn = fn
        self._memo = {}

    def __call__(self, g):
        key = g.labeled_key()
        hit = self._memo.get(key)
        if hit is None:
            hit = self.fn(g)
            if isinstance(hit, int):
                hit = QPoly.const(hit)
            self._memo[key] = hit
        return hit

    def __repr__(self):
        return "GraphChar(%s)" % self.name


def epsilon_char():
    return GraphChar("eps", epsilon_value)


def epsilon1_char():
    return GraphChar("eps1", epsilon1_value)


def psi_char(k=1):
    """Gamma -> q^(k * b1(Gamma)); k may be negative (Laurent values)."""
    return GraphChar("psi(q^%d)" % k, lambda g: QPoly.monomial(k * g.b1()))


def psi_inverse_char(k=1):
    """Gamma -> (-1)^#E * q^(k * b1); the convolution inverse of psi."""
    return GraphChar(
        "(-1)^E*psi(q^%d)" % k,
        lambda g: QPoly.monomial(k * g.b1(), (-1) ** (g.edge_count() % 2)))


def r_d_char(d):
    """R_d extended multiplicatively over components."""
    return GraphChar("R_%d" % d, lambda g: r_d_on_components(g, d))


def convolve(f, g, guard=GUARD_SUBSETS):
    """(f * g)(Gamma) = sum over A of f(Gamma[A]) * g(Gamma/A)."""
    def evaluate(graph):
        ids = sorted(graph.edge_ids())
        if len(ids) > guard:
            raise GuardError("2^%d convolution terms exceed guard" % len(ids))
        total = QPoly()
        for mask in range(1 << len(ids)):
            a = frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)
            total = total + f(graph.spanning_subgraph(a)) * g(graph.contract(a))
        return total

    return GraphChar("(%s*%s)" % (f.name, g.name), evaluate)


def r_d_via_convolution(gamma, d, guard=GUARD_SUBSETS):
    """R_d computed as the convolution psi(q^(d-1)) * ... * psi(q^0);
    asserted equal to the direct depth-function sum."""
    if d < 1:
        raise ValueError("d >= 1 required")
    if not gamma.is_connected():
        raise ValueError("gamma must be connected")
    char = psi_char(d - 1)
    for k in range(d - 2, -1, -1):
        char = convolve(char, psi_char(k), guard=guard)
    value = char(gamma)
    assert value == r_d_polynomial(gamma, d), (value, d)
    return value


def check_recursion(gamma, guard=GUARD_SUBSETS):
    """Verify R(gamma,q,T) = eps(gamma) + T * sum over A of
    R(gamma/A, q, q^b1(gamma[A]) T), exactly as rational functions."""
    if not gamma.is_connected():
        raise ValueError("gamma must be connected")
    lhs = r_genfun(gamma, guard=guard)
    ids = sorted(gamma.edge_ids())
    if len(ids) > guard:
        raise GuardError("2^%d recursion terms exceed guard" % len(ids))
    rhs = RatQT(epsilon_value(gamma))
    for mask in range(1 << len(ids)):
        a = frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)
        scale = gamma.spanning_subgraph(a).b1()
        term = r_genfun(gamma.contract(a), guard=guard).subs_t_scale(scale)
        rhs = rhs + term.t_shift(1)
    return lhs == rhs


def check_duality(g, which, guard=GUARD_SUBSETS):
    """Inversion identity under (q, T) -> (1/q, 1/T):

      which='A':  A(1/q, 1/T) = eps1(g) + (-1)^#V * A(q, T)
      which='R':  R(1/q, 1/T) = eps(g) + (-1)^(#E - 1) * q^b1 * R(q, T)
    """
    if not g.is_connected():
        raise ValueError("g must be connected")
    if which == "A":
        f = a_genfun(g, guard=guard)
        sign = (-1) ** (g.n % 2)
        rhs = RatQT(epsilon1_value(g)) + sign * f
        return f.invert_vars() == rhs
    if which == "R":
        f = r_genfun(g, guard=guard)
        sign = (-1) ** ((g.edge_count() - 1) % 2)
        rhs = RatQT(epsilon_value(g)) + sign * (QPoly.monomial(g.b1()) * f)
        return f.invert_vars() == rhs
    raise ValueError("which must be 'A' or 'R'")


def t_pochhammer(m):
    """(T)_m = prod_{i=0}^{m-1} (1 - q^i T) as a QTPoly."""
    out = QTPoly.const(1)
    for i in range(m):
        out = out * (QTPoly.const(1) - QTPoly.monomial(i, 1))
    return out


def q_eulerian(m, guard=GUARD_SUBSETS):
    """The q-analog Eulerian polynomial F_m(q, T), extracted from
    R(S_m, q, T) = T F_m(q, T) / (T)_{m+1} by exact division."""
    if m < 1:
        raise ValueError("m >= 1 required")
    from .families import loops_graph
    f = r_genfun(loops_graph(m), guard=guard) * t_pochhammer(m + 1)
    if f.den:
        raise ArithmeticError("(T)_{m+1} did not clear the denominator")
    num = f.num
    if num.val_t() < 1:
        raise ArithmeticError("numerator is not divisible by T")
    return num.shift(0, -1)


def eulerian_numbers(n):
    """Row n of the Eulerian triangle: [A(n,0), ..., A(n,n-1)], the
    numerator coefficients of sum_k (k+1)^n T^k times (1-T)^(n+1)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    row = [1]
    for size in range(2, n + 1):
        prev = row
        row = [0] * size
        for j in range(size):
            left = prev[j - 1] if 0 <= j - 1 < len(prev) else 0
            here = prev[j] if j < len(prev) else 0
            row[j] = (size - j) * left + (j + 1) * here
    return row[:n]


def binomial_qseries_identity(m):
    """Check sum_{i=0}^m C(m,i) (q-1)^i F_i(q,T)/(T)_{i+1} = q^m/(1-q^m T)
    with the i = 0 term read as 1/(1-T)."""
    qm1 = QPoly({1: 1, 0: -1})
    total = RatQT(QTPoly.const(1), {0: 1})
    for i in range(1, m + 1):
        f_i = q_eulerian(i)
        term = RatQT(f_i * (qm1 ** i * comb(m, i)), Counter(range(i + 1)))
        total = total + term
    rhs = RatQT(QTPoly.monomial(m, 0), {m: 1})
    return total == rhs
