"""Undirected multigraphs with stable edge ids, plus quivers.

Vertices are labeled 1..n.  Edges carry ids that survive subgraph and
contraction operations, so depth functions and filtrations transport
canonically.  Loops and parallel edges are allowed everywhere.
"""

from functools import lru_cache

from .polynomials import QTPoly

GUARD_EDGES = 20


class GuardError(RuntimeError):
    """An enumeration would exceed its configured size guard."""


class Multigraph:
    __slots__ = ("n", "edges", "_by_id")

    def __init__(self, vertex_count, edges):
        """edges: iterable of (edge_id, u, v) with 1 <= u, v <= vertex_count."""
        self.n = int(vertex_count)
        if self.n < 0:
            raise ValueError("vertex_count must be >= 0")
        self.edges = tuple((int(e), int(u), int(v)) for e, u, v in edges)
        self._by_id = {}
        for e, u, v in self.edges:
            if e in self._by_id:
                raise ValueError("duplicate edge id %d" % e)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError("edge %d has endpoint outside 1..%d" % (e, self.n))
            self._by_id[e] = (u, v)

    def edge_ids(self):
        return tuple(e for e, _, _ in self.edges)

    def endpoints(self, eid):
        try:
            return self._by_id[eid]
        except KeyError:
            raise ValueError("unknown edge id %r" % (eid,)) from None

    def edge_count(self):
        return len(self.edges)

    def is_loop(self, eid):
        u, v = self.endpoints(eid)
        return u == v

    def _check_subset(self, a):
        a = frozenset(a)
        for e in a:
            if e not in self._by_id:
                raise ValueError("unknown edge id %r" % (e,))
        return a

    def component_labels(self):
        """Map vertex -> smallest vertex in its connected component."""
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for _, u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                if ru > rv:
                    ru, rv = rv, ru
                parent[rv] = ru
        return {v: find(v) for v in range(1, self.n + 1)}

    def component_count(self):
        return len(set(self.component_labels().values()))

    def is_connected(self):
        return self.n <= 1 or self.component_count() == 1

    def b1(self):
        """First Betti number: #edges - #vertices + #components."""
        return len(self.edges) - self.n + self.component_count()

    def spanning_subgraph(self, a):
        """Keep all vertices, restrict edges to the subset a."""
        a = self._check_subset(a)
        return Multigraph(self.n, [t for t in self.edges if t[0] in a])

    def delete_edges(self, a):
        a = self._check_subset(a)
        return Multigraph(self.n, [t for t in self.edges if t[0] not in a])

    def contract(self, a):
        """Contract every edge in a; loops in a are deleted without merging.

        Surviving edges keep their ids; an edge whose endpoints merge
        becomes a loop.  New vertices are relabeled 1..m in order of the
        smallest original label in each merged class.
        """
        a = self._check_subset(a)
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in a:
            u, v = self._by_id[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                if ru > rv:
                    ru, rv = rv, ru
                parent[rv] = ru
        reps = sorted({find(v) for v in range(1, self.n + 1)})
        relabel = {r: i + 1 for i, r in enumerate(reps)}
        new_edges = []
        for e, u, v in self.edges:
            if e in a:
                continue
            new_edges.append((e, relabel[find(u)], relabel[find(v)]))
        return Multigraph(len(reps), new_edges)

    def b1_of_contraction(self, a):
        """b1(self / a) without building the contracted graph."""
        a = self._check_subset(a)
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in a:
            u, v = self._by_id[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        merged = {find(v) for v in range(1, self.n + 1)}
        comp = {r: r for r in merged}

        def cfind(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        kept = 0
        for e, u, v in self.edges:
            if e in a:
                continue
            kept += 1
            ru, rv = cfind(find(u)), cfind(find(v))
            if ru != rv:
                comp[max(ru, rv)] = min(ru, rv)
        ncomp = len({cfind(r) for r in merged})
        return kept - len(merged) + ncomp

    def connected_spanning_subgraphs(self, guard=GUARD_EDGES):
        """Yield the edge subsets whose spanning subgraph is connected.

        Deterministic order: subsets of the sorted id list in binary
        counting order (lexicographic on the indicator over sorted ids).
        """
        ids = sorted(self._by_id)
        m = len(ids)
        if m > guard:
            raise GuardError("2^%d subsets exceeds guard; pass a larger guard" % m)
        for mask in range(1 << m):
            subset = frozenset(ids[i] for i in range(m) if mask >> i & 1)
            if self.spanning_connected(subset):
                yield subset

    def spanning_connected(self, a):
        """True iff the spanning subgraph on edge subset a is connected."""
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merges = 0
        for e in a:
            u, v = self._by_id[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
                merges += 1
        return merges == self.n - 1

    def bridge_count(self):
        """Number of edges whose deletion disconnects their component."""
        base = self.component_count()
        return sum(1 for e, u, v in self.edges
                   if u != v and self.delete_edges([e]).component_count() > base)

    def spanning_tree_count(self):
        """Number of spanning trees by an exact reduced-Laplacian determinant.

        Loops are ignored; parallel edges count with multiplicity.
        Returns 0 when disconnected, 1 for a single vertex.
        """
        if self.n == 0:
            return 0
        if self.n == 1:
            return 1
        size = self.n - 1
        lap = [[0] * size for _ in range(size)]
        for _, u, v in self.edges:
            if u == v:
                continue
            iu, iv = u - 2, v - 2
            if u > 1:
                lap[iu][iu] += 1
            if v > 1:
                lap[iv][iv] += 1
            if u > 1 and v > 1:
                lap[iu][iv] -= 1
                lap[iv][iu] -= 1
        return _bareiss_det(lap)

    def canonical_key(self):
        return (self.n, tuple(sorted((min(u, v), max(u, v)) for _, u, v in self.edges)))

    def labeled_key(self):
        return (self.n, tuple(sorted((e, min(u, v), max(u, v)) for e, u, v in self.edges)))

    def relabel_vertices(self, perm):
        """perm: map old vertex -> new vertex (a bijection on 1..n)."""
        return Multigraph(self.n, [(e, perm[u], perm[v]) for e, u, v in self.edges])

    def tutte(self):
        """Tutte polynomial (variables x, y) by deletion-contraction."""
        if not self.is_connected():
            raise ValueError("Tutte polynomial implemented for connected graphs only")
        return _tutte_key(self.canonical_key())

    def __str__(self):
        return "Multigraph(%d vertices; edges %s)" % (
            self.n, ", ".join("%d:%d-%d" % t for t in self.edges))

    __repr__ = __str__


def _bareiss_det(m):
    """Fraction-free exact integer determinant (Bareiss)."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@lru_cache(maxsize=None)
def _tutte_key(key):
    n, pairs = key
    g = Multigraph(n, [(i + 1, u, v) for i, (u, v) in enumerate(pairs)])
    if not g.edges:
        return QTPoly.const(1, vars=("x", "y"))
    eid, u, v = g.edges[0]
    if u == v:
        return QTPoly.monomial(0, 1, vars=("x", "y")) * _tutte_key(g.delete_edges([eid]).canonical_key())
    deleted = g.delete_edges([eid])
    if deleted.component_count() > g.component_count():
        # bridge
        return QTPoly.monomial(1, 0, vars=("x", "y")) * _tutte_key(g.contract([eid]).canonical_key())
    return (_tutte_key(deleted.canonical_key())
            + _tutte_key(g.contract([eid]).canonical_key()))


def strict_filtrations(edge_ids, guard=GUARD_EDGES):
    """Yield every strict filtration of the edge set as a chain of
    cumulative frozensets (F_1, ..., F_l) with F_l the full set.

    Equivalently all ordered set partitions; for |E| = m there are
    ordered-Bell-many of them.  The empty set yields one empty chain.
    """
    ids = tuple(sorted(edge_ids))
    if len(ids) > guard:
        raise GuardError("ordered set partitions of %d edges exceed guard" % len(ids))

    def rec(remaining, prefix_union):
        if not remaining:
            yield ()
            return
        m = len(remaining)
        for mask in range(1, 1 << m):
            block = tuple(remaining[i] for i in range(m) if mask >> i & 1)
            cumulative = prefix_union | frozenset(block)
            rest = tuple(x for x in remaining if x not in cumulative)
            for tail in rec(rest, cumulative):
                yield (cumulative,) + tail

    return rec(ids, frozenset())


class Quiver:
    """A multigraph whose edges carry an orientation (source, target)."""

    __slots__ = ("graph", "orientation")

    def __init__(self, graph, orientation):
        self.graph = graph
        self.orientation = dict(orientation)
        for e, u, v in graph.edges:
            st = self.orientation.get(e)
            if st is None or {st[0], st[1]} != {u, v}:
                raise ValueError("orientation of edge %d inconsistent with endpoints" % e)

    @classmethod
    def from_edges(cls, vertex_count, arrows):
        """arrows: iterable of (source, target); ids assigned 1..m in order."""
        arrows = [(i + 1, s, t) for i, (s, t) in enumerate(arrows)]
        g = Multigraph(vertex_count, arrows)
        return cls(g, {e: (u, v) for e, u, v in arrows})

    @property
    def n(self):
        return self.graph.n

    def arrows(self):
        """Ordered (edge_id, source, target) triples."""
        return tuple((e, *self.orientation[e]) for e, _, _ in self.graph.edges)

    def flip(self, edge_subset):
        new = dict(self.orientation)
        for e in edge_subset:
            s, t = new[e]
            new[e] = (t, s)
        return Quiver(self.graph, new)

    def all_orientations(self):
        ids = self.graph.edge_ids()
        proper = [e for e in ids if not self.graph.is_loop(e)]
        for mask in range(1 << len(proper)):
            yield self.flip([proper[i] for i in range(len(proper)) if mask >> i & 1])

    def __str__(self):
        return "Quiver(%d vertices; arrows %s)" % (
            self.n, ", ".join("%d:%d->%d" % a for a in self.arrows()))

    __repr__ = __str__
