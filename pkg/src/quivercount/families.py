"""Named graph families and small-graph enumeration.

The enumerators produce connected multigraphs with loops and parallel
edges; they back the property batteries, which sweep every isomorphism
class up to a given edge count.
"""

from functools import lru_cache
from itertools import combinations_with_replacement, permutations

from .multigraph import Multigraph, Quiver


def cycle_graph(n):
    """C_n: vertices 1..n, edge i -- i+1 (mod n).  C_1 is a single loop."""
    if n < 1:
        raise ValueError("n >= 1 required")
    if n == 1:
        return Multigraph(1, [(1, 1, 1)])
    return Multigraph(n, [(i, i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n):
    """A_n: n vertices in a row, n-1 edges."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return Multigraph(n, [(i, i, i + 1) for i in range(1, n)])


def loops_graph(m):
    """S_m: a single vertex carrying m loops (S_0 is the point)."""
    if m < 0:
        raise ValueError("m >= 0 required")
    return Multigraph(1, [(i, 1, 1) for i in range(1, m + 1)])


def banana_graph(m):
    """Two vertices joined by m parallel edges (m = 2 gives C_2)."""
    if m < 1:
        raise ValueError("m >= 1 required")
    return Multigraph(2, [(i, 1, 2) for i in range(1, m + 1)])


def point_graph():
    return Multigraph(1, [])


def cycle_quiver(n):
    g = cycle_graph(n)
    if n == 1:
        return Quiver(g, {1: (1, 1)})
    return Quiver(g, {i: (i, i % n + 1) for i in range(1, n + 1)})


def path_quiver(n):
    g = path_graph(n)
    return Quiver(g, {i: (i, i + 1) for i in range(1, n)})


def jordan_quiver(m=1):
    g = loops_graph(m)
    return Quiver(g, {i: (1, 1) for i in range(1, m + 1)})


def banana_quiver(m):
    g = banana_graph(m)
    return Quiver(g, {i: (1, 2) for i in range(1, m + 1)})


def _canonical_form(n, pairs):
    """Minimal edge multiset over all vertex relabelings."""
    best = None
    for perm in permutations(range(1, n + 1)):
        relab = {i + 1: perm[i] for i in range(n)}
        key = tuple(sorted((min(relab[u], relab[v]), max(relab[u], relab[v]))
                           for u, v in pairs))
        if best is None or key < best:
            best = key
    return (n, best)


@lru_cache(maxsize=None)
def all_connected_multigraphs(max_edges):
    """All connected multigraphs with at most max_edges edges, one labeled
    representative per isomorphism class (loops and parallel edges included).
    """
    found = {}
    for e in range(0, max_edges + 1):
        for n in range(1, e + 2):
            pair_types = [(u, v) for u in range(1, n + 1) for v in range(u, n + 1)]
            for combo in combinations_with_replacement(pair_types, e):
                g = Multigraph(n, [(i + 1, u, v) for i, (u, v) in enumerate(combo)])
                if not g.is_connected():
                    continue
                key = _canonical_form(n, combo)
                if key not in found:
                    found[key] = g
    return tuple(found.values())


def random_connected_multigraph(rng, max_edges=5):
    """One uniform-ish connected multigraph with 1..max_edges edges."""
    while True:
        e = rng.randint(1, max_edges)
        n = rng.randint(1, e + 1)
        edges = []
        for i in range(e):
            u = rng.randint(1, n)
            v = rng.randint(1, n)
            edges.append((i + 1, min(u, v), max(u, v)))
        g = Multigraph(n, edges)
        if g.is_connected():
            return g
