import random
from itertools import permutations

import numpy as np
import pytest

from riccialign import (
    Graph,
    GraphError,
    align,
    are_nodes_equivalent,
    common_max_degree,
    cost_matrix,
    degree_matrix,
    from_edge_list,
    hungarian,
    ricci_matrix,
    score_alignment,
    write_assignment_csv,
)

from conftest import random_connected_graph

CLAW = [(0, 1), (0, 2), (0, 3)]
K3 = [(0, 1), (0, 2), (1, 2)]


def star(leaves: int) -> Graph:
    return from_edge_list([(0, i) for i in range(1, leaves + 1)])


def test_common_max_degree():
    assert common_max_degree(from_edge_list(CLAW), from_edge_list(K3)) == 3
    g = random_connected_graph(10, seed=0)
    assert common_max_degree(g, g) == g.max_degree()
    assert common_max_degree(star(4), star(7)) == 7


def test_degree_matrix_claw():
    m = degree_matrix(from_edge_list(CLAW), 3)
    assert m.rows[0].tolist() == [1, 1, 1]
    for leaf in (1, 2, 3):
        assert m.rows[leaf].tolist() == [3, 0, 0]


def test_degree_matrix_worked_example(example_graph):
    assert degree_matrix(example_graph, 5).rows[0].tolist() == [1, 4, 5, 0, 0]


def test_degree_matrix_regular_graph_rows_identical():
    m = degree_matrix(from_edge_list(K3), 2)
    assert (m.rows == m.rows[0]).all()


def test_degree_matrix_width_validation(example_graph):
    with pytest.raises(GraphError):
        degree_matrix(example_graph, 4)


def test_ricci_matrix_worked_example(example_graph):
    assert ricci_matrix(example_graph, 5).rows[0].tolist() == [-27, -20, -2, 0, 0]


def test_ricci_matrix_torus_hole_row(lifted_torus):
    rows = ricci_matrix(lifted_torus, 6).rows
    assert rows[0].tolist() == [-56, -56, -56, -40, -40, -28]


def test_ricci_matrix_k3():
    m = ricci_matrix(from_edge_list(K3), 2)
    assert (m.rows == [-4, -4]).all()


def test_ricci_matrix_rejects_weighted():
    g = Graph(2, [(0, 1)], edge_weights={(0, 1): 2.0})
    with pytest.raises(GraphError):
        ricci_matrix(g, 1)


def test_ricci_rows_have_degree_many_nonzeros(example_graph, lifted_torus):
    for g in (example_graph, lifted_torus):
        m = ricci_matrix(g, g.max_degree())
        for v in g.nodes:
            assert int((m.rows[v] != 0).sum()) == g.degree(v)


def test_cost_matrix_zero_diagonal(example_graph):
    m = ricci_matrix(example_graph, 5)
    c = cost_matrix(m, m)
    assert (np.diag(c) == 0).all()


def test_cost_matrix_345():
    from riccialign import SignatureMatrix

    m1 = SignatureMatrix(rows=np.array([[0, 0]], dtype=np.int64),
                         node_order=(0,), mode="degree")
    m2 = SignatureMatrix(rows=np.array([[3, 4]], dtype=np.int64),
                         node_order=(0,), mode="degree")
    assert cost_matrix(m1, m2)[0, 0] == 5.0


def test_cost_matrix_symmetry(example_graph):
    g2 = random_connected_graph(9, seed=1)
    m = common_max_degree(example_graph, g2)
    c12 = cost_matrix(degree_matrix(example_graph, m), degree_matrix(g2, m))
    c21 = cost_matrix(degree_matrix(g2, m), degree_matrix(example_graph, m))
    assert (c12 == c21.T).all()


def test_cost_matrix_zero_iff_rows_identical():
    rng = random.Random(0)
    rows1 = np.array([[rng.randint(-5, 0) for _ in range(4)] for _ in range(6)])
    rows2 = rows1.copy()
    rows2[3, 0] += 1
    from riccialign import SignatureMatrix

    m1 = SignatureMatrix(rows=rows1, node_order=tuple(range(6)), mode="ricci")
    m2 = SignatureMatrix(rows=rows2, node_order=tuple(range(6)), mode="ricci")
    c = cost_matrix(m1, m2)
    for i in range(6):
        for j in range(6):
            assert (c[i, j] == 0) == (rows1[i] == rows2[j]).all()


def test_cost_matrix_validates_width_and_mode(example_graph):
    with pytest.raises(GraphError):
        cost_matrix(degree_matrix(example_graph, 5), degree_matrix(example_graph, 6))
    with pytest.raises(GraphError):
        cost_matrix(degree_matrix(example_graph, 5), ricci_matrix(example_graph, 5))


def _brute_force_min(cost: np.ndarray) -> float:
    n = cost.shape[0]
    return min(sum(cost[i, p[i]] for i in range(n)) for p in permutations(range(n)))


def test_hungarian_small_cases():
    ident = hungarian([[0, 1], [1, 0]])
    assert ident.mapping == {0: 0, 1: 1}
    assert ident.total_cost == 0.0
    diag = hungarian([[1, 2], [3, 1]])
    assert diag.mapping == {0: 0, 1: 1}
    assert diag.total_cost == 2.0


def test_hungarian_matches_permutation_oracle():
    rng = random.Random(99)
    for trial in range(30):
        n = rng.randint(2, 8)
        c = np.array([[rng.randint(0, 30) for _ in range(n)] for _ in range(n)],
                     dtype=np.float64)
        assert hungarian(c).total_cost == _brute_force_min(c)


def test_hungarian_is_deterministic():
    rng = random.Random(5)
    c = np.array([[rng.randint(0, 4) for _ in range(12)] for _ in range(12)],
                 dtype=np.float64)
    assert hungarian(c).mapping == hungarian(c).mapping


def test_hungarian_mapping_is_permutation():
    rng = random.Random(17)
    c = np.array([[rng.randint(0, 9) for _ in range(9)] for _ in range(9)])
    a = hungarian(c)
    assert sorted(a.mapping) == list(range(9))
    assert sorted(a.mapping.values()) == list(range(9))
    assert a.total_cost == sum(c[i, j] for i, j in a.mapping.items())


def test_hungarian_validates_input():
    with pytest.raises(GraphError):
        hungarian(np.zeros((2, 3)))
    with pytest.raises(GraphError):
        hungarian(np.array([[np.inf, 1.0], [1.0, 0.0]]))
    with pytest.raises(GraphError):
        hungarian(np.array([[-1.0, 1.0], [1.0, 0.0]]))


def test_align_identical_graphs_costs_nothing(lifted_torus):
    for mode in ("degree", "ricci"):
        result = align(lifted_torus, lifted_torus, mode=mode)
        assert result.total_cost == 0.0


def test_align_torus_pair_maps_hole_to_hole(lifted_torus):
    from riccialign import node_curvatures

    curv = node_curvatures(lifted_torus)
    lowest = min(curv)
    result = align(lifted_torus, lifted_torus, mode="ricci")
    for v in lifted_torus.nodes:
        if curv[v] == lowest:
            assert curv[result.mapping[v]] == lowest


def test_align_rejects_unequal_sizes():
    with pytest.raises(GraphError):
        align(star(3), star(4))


def test_align_rejects_unknown_mode(lifted_torus):
    with pytest.raises(GraphError):
        align(lifted_torus, lifted_torus, mode="spectral")


def test_score_alignment():
    from riccialign import Assignment

    identity = Assignment(mapping={i: i for i in range(500)}, total_cost=0.0)
    assert score_alignment(identity) == (500, 100.0)
    shifted = Assignment(mapping={i: (i + 1) % 10 for i in range(10)}, total_cost=1.0)
    assert score_alignment(shifted) == (0, 0.0)
    partial = Assignment(
        mapping={i: i if i < 416 else (i + 1) % 500 + 416 for i in range(500)},
        total_cost=0.0)
    count, pct = score_alignment(partial)
    assert count == 416
    assert pct == 83.2


def test_signature_locality_under_added_component(example_graph):
    # appending the same disconnected triangle to both graphs leaves the
    # original rows, and hence their pairwise costs, untouched
    base = example_graph
    n = base.num_nodes
    extra = [(n, n + 1), (n, n + 2), (n + 1, n + 2)]
    augmented = Graph(n + 3, list(base.edges) + extra)
    m = max(base.max_degree(), augmented.max_degree())
    rows_base = ricci_matrix(base, m).rows
    rows_aug = ricci_matrix(augmented, m).rows
    assert (rows_aug[:n] == rows_base).all()


def test_are_nodes_equivalent_reflexive_and_symmetric_leaves():
    claw = from_edge_list(CLAW)
    assert are_nodes_equivalent(claw, 1, 1)
    assert are_nodes_equivalent(claw, 1, 2)


def test_are_nodes_equivalent_degree_gate():
    g = star(4)
    assert not are_nodes_equivalent(g, 0, 0)  # degree 4 center
    assert are_nodes_equivalent(g, 1, 2)


def test_are_nodes_equivalent_distinguishes_structure():
    # path 0-1-2-3-4: node 1 sees degree lists [[2],[2,2]], node 3 sees [[2,2],[1... ]]
    p5 = from_edge_list([(0, 1), (1, 2), (2, 3), (3, 4)])
    assert are_nodes_equivalent(p5, 1, 3)
    assert not are_nodes_equivalent(p5, 0, 2)


def test_are_nodes_equivalent_searches_all_permutations():
    # u's neighbor signature lists arrive in the opposite order to v's, so an
    # early-return comparison of only the first permutation would say False
    g = from_edge_list([
        (0, 1), (0, 2),          # u = 0 with neighbors 1 (leaf-ish) and 2
        (1, 3),                  # neighbor 1 continues to a leaf
        (2, 4), (2, 5),          # neighbor 2 branches
        (6, 7), (6, 8),          # v = 6 mirrors u with swapped neighbor roles
        (7, 9), (7, 10),
        (8, 11),
    ])
    sig_u = [sorted(g.degree(x) for x in g.neighbors(w)) for w in g.neighbors(0)]
    sig_v = [sorted(g.degree(x) for x in g.neighbors(w)) for w in g.neighbors(6)]
    assert sig_u != sig_v                # first permutation alone fails
    assert sorted(sig_u) == sorted(sig_v)
    assert are_nodes_equivalent(g, 0, 6)


def test_write_assignment_csv(tmp_path):
    c = np.array([[0.0, 1.0], [1.0, 0.0]])
    a = hungarian(c)
    path = tmp_path / "assignment.csv"
    write_assignment_csv(a, c, path)
    assert path.read_text() == "g1_node,g2_node,row_cost\n0,0,0.0\n1,1,0.0\n"
