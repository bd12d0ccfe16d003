from itertools import combinations

import pytest

from quivercount.families import (all_connected_multigraphs, banana_graph,
                                  cycle_graph, loops_graph, path_graph,
                                  point_graph)
from quivercount.multigraph import (GuardError, Multigraph, Quiver,
                                    strict_filtrations)
from quivercount.polynomials import QTPoly

ORDERED_BELL = [1, 1, 3, 13, 75, 541]


def test_b1_examples():
    assert cycle_graph(3).b1() == 1
    assert point_graph().b1() == 0
    assert loops_graph(2).b1() == 2
    assert path_graph(4).b1() == 0


def test_construction_validation():
    with pytest.raises(ValueError):
        Multigraph(2, [(1, 1, 3)])
    with pytest.raises(ValueError):
        Multigraph(2, [(1, 1, 2), (1, 2, 2)])


def test_contract_examples():
    c3 = cycle_graph(3)
    g = c3.contract([1])
    assert g.n == 2 and g.edge_count() == 2
    assert sorted(g.edge_ids()) == [2, 3]
    assert not g.is_loop(2) and not g.is_loop(3)
    assert {g.endpoints(2), g.endpoints(3)} <= {(1, 2), (2, 1)}

    g = c3.contract([1, 2])
    assert g.n == 1 and g.edge_count() == 1 and g.is_loop(3)

    s1 = loops_graph(1)
    g = s1.contract([1])
    assert g.n == 1 and g.edge_count() == 0

    with pytest.raises(ValueError):
        c3.contract([99])


def test_spanning_subgraph_examples():
    c3 = cycle_graph(3)
    g = c3.spanning_subgraph([1])
    assert g.n == 3 and g.edge_count() == 1 and g.b1() == 0
    assert c3.spanning_subgraph([1, 2, 3]).labeled_key() == c3.labeled_key()
    g = c3.spanning_subgraph([])
    assert g.n == 3 and g.edge_count() == 0
    with pytest.raises(ValueError):
        c3.spanning_subgraph([7])


def test_connected_spanning_subgraphs():
    assert len(list(cycle_graph(3).connected_spanning_subgraphs())) == 4
    assert len(list(banana_graph(2).connected_spanning_subgraphs())) == 3
    assert list(path_graph(2).connected_spanning_subgraphs()) == [frozenset([1])]
    # disconnected host yields nothing
    g = Multigraph(3, [(1, 1, 2)])
    assert list(g.connected_spanning_subgraphs()) == []


def test_connected_spanning_subgraphs_against_naive_filter():
    for g in [cycle_graph(4), cycle_graph(6), banana_graph(3), loops_graph(2),
              Multigraph(3, [(1, 1, 2), (2, 2, 3), (3, 3, 1), (4, 1, 1), (5, 2, 3)]),
              Multigraph(3, [(1, 1, 2), (2, 1, 2), (3, 2, 3), (4, 2, 3), (5, 1, 3), (6, 3, 3)])]:
        ids = sorted(g.edge_ids())
        naive = set()
        for r in range(len(ids) + 1):
            for combo in combinations(ids, r):
                if g.spanning_subgraph(combo).is_connected():
                    naive.add(frozenset(combo))
        assert set(g.connected_spanning_subgraphs()) == naive


def test_strict_filtration_counts():
    for m in range(6):
        assert sum(1 for _ in strict_filtrations(range(m))) == ORDERED_BELL[m]
    chains = list(strict_filtrations([1, 2]))
    assert (frozenset([1, 2]),) in chains
    assert (frozenset([1]), frozenset([1, 2])) in chains
    assert (frozenset([2]), frozenset([1, 2])) in chains
    assert len(chains) == 3
    assert list(strict_filtrations([])) == [()]


def test_spanning_tree_counts():
    assert cycle_graph(3).spanning_tree_count() == 3
    assert banana_graph(2).spanning_tree_count() == 2
    assert path_graph(5).spanning_tree_count() == 1
    assert loops_graph(3).spanning_tree_count() == 1
    assert Multigraph(3, [(1, 1, 2)]).spanning_tree_count() == 0
    assert cycle_graph(4).spanning_tree_count() == 4


def test_tutte_base_cases_and_values():
    y = QTPoly.monomial(0, 1, vars=("x", "y"))
    x = QTPoly.monomial(1, 0, vars=("x", "y"))
    assert loops_graph(1).tutte() == y
    assert path_graph(2).tutte() == x
    assert banana_graph(2).tutte() == x + y
    assert cycle_graph(3).tutte() == x ** 2 + x + y
    with pytest.raises(ValueError):
        Multigraph(2, []).tutte()


def test_tutte_at_one_one_counts_spanning_trees():
    for g in all_connected_multigraphs(5):
        assert g.tutte().evaluate(1, 1) == g.spanning_tree_count()


def test_b1_additivity_over_all_subsets():
    for g in all_connected_multigraphs(5):
        ids = sorted(g.edge_ids())
        for mask in range(1 << len(ids)):
            a = frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)
            sub = g.spanning_subgraph(a)
            quo = g.contract(a)
            assert g.b1() == sub.b1() + quo.b1()
            assert g.edge_count() == sub.edge_count() + quo.edge_count()


def test_contract_composition_on_disjoint_subsets():
    g = Multigraph(4, [(1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 4, 1), (5, 1, 1)])
    ids = sorted(g.edge_ids())
    for mask_a in range(1 << len(ids)):
        a = frozenset(ids[i] for i in range(len(ids)) if mask_a >> i & 1)
        rest = [e for e in ids if e not in a]
        for mask_b in range(1 << len(rest)):
            b = frozenset(rest[i] for i in range(len(rest)) if mask_b >> i & 1)
            lhs = g.contract(a | b)
            rhs = g.contract(a).contract(b)
            assert lhs.n == rhs.n and lhs.labeled_key() == rhs.labeled_key()


def test_b1_of_contraction_matches_graph_construction():
    for g in all_connected_multigraphs(4):
        ids = sorted(g.edge_ids())
        for mask in range(1 << len(ids)):
            a = frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)
            assert g.b1_of_contraction(a) == g.contract(a).b1()


def test_guard_on_subset_enumeration():
    g = cycle_graph(3)
    with pytest.raises(GuardError):
        list(g.connected_spanning_subgraphs(guard=2))
    with pytest.raises(GuardError):
        list(strict_filtrations([1, 2, 3], guard=2))


def test_quiver_orientations():
    q = Quiver.from_edges(3, [(1, 2), (2, 3), (3, 1)])
    assert q.arrows() == ((1, 1, 2), (2, 2, 3), (3, 3, 1))
    flipped = q.flip([2])
    assert flipped.arrows()[1] == (2, 3, 2)
    assert flipped.graph.labeled_key() == q.graph.labeled_key()
    assert len(list(q.all_orientations())) == 8
    loop = Quiver.from_edges(1, [(1, 1)])
    assert len(list(loop.all_orientations())) == 1
    with pytest.raises(ValueError):
        Quiver(q.graph, {1: (1, 3), 2: (2, 3), 3: (3, 1)})
