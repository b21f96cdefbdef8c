import numpy as np
import pytest
from hypothesis import given, settings

from edgegp.generators import Complete, Cycle, Grid, Hypercube, Path, Product, generate
from edgegp.graph import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeSet,
    SelfLoopError,
    VertexRangeError,
    all_pairs_distances,
    bfs_distances,
    bipartition,
    build_graph,
    diameter,
)

from support import connected_graphs, floyd_warshall


def test_smallest_graph():
    g = build_graph(2, [(0, 1)])
    assert g.n == 2 and g.m == 1 and g.edges == ((0, 1),)


def test_c4_canonical_edges():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert g.edge_id(3, 0) == 1
    assert g.adjacency[0] == (1, 3)


@pytest.mark.parametrize(
    "n, edges, error",
    [
        (4, [(0, 1), (2, 3)], DisconnectedGraphError),
        (3, [(0, 1), (1, 1)], SelfLoopError),
        (3, [(0, 1), (1, 0), (1, 2)], DuplicateEdgeError),
        (3, [(0, 1), (1, 3)], VertexRangeError),
        (0, [], VertexRangeError),
    ],
)
def test_build_graph_rejects(n, edges, error):
    with pytest.raises(error):
        build_graph(n, edges)


def test_build_graph_deterministic():
    a = build_graph(5, [(4, 3), (0, 1), (2, 1), (3, 2)])
    b = build_graph(5, [(1, 2), (3, 4), (1, 0), (2, 3)])
    assert a == b and a.edges == b.edges


def test_distance_examples():
    c4 = generate(Cycle(4))
    assert all_pairs_distances(c4)[0, 2] == 2
    q3 = generate(Hypercube(3))
    assert all_pairs_distances(q3)[0b000, 0b111] == 3
    p5 = generate(Path(5))
    assert all_pairs_distances(p5)[0, 4] == 4


def test_diameter_examples():
    for f, expected in [(Complete(5), 1), (Cycle(6), 3), (Grid(10, 7), 15)]:
        g = generate(f)
        assert diameter(g, all_pairs_distances(g)) == expected


def test_bipartition_examples():
    a, b = bipartition(generate(Cycle(6)))
    assert len(a) == len(b) == 3 and 0 in a
    assert bipartition(generate(Complete(3))) is None
    even, odd = bipartition(generate(Hypercube(3)))
    assert even == {v for v in range(8) if bin(v).count("1") % 2 == 0}
    assert odd == {v for v in range(8) if bin(v).count("1") % 2 == 1}


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=10))
def test_distance_matrix_invariants(g):
    d = all_pairs_distances(g).dist
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    for u in range(g.n):
        for v in range(g.n):
            assert (d[u, v] == 1) == g.has_edge(u, v)
    # triangle inequality, vectorised over the middle vertex
    assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()
    assert diameter(g, all_pairs_distances(g)) == d.max()
    fw = floyd_warshall(g)
    assert d.tolist() == fw
    assert [bfs_distances(g, s) for s in range(g.n)] == d.tolist()


@pytest.mark.parametrize(
    "left, right",
    [(Cycle(5), Path(4)), (Complete(4), Cycle(6)), (Hypercube(3), Path(5)), (Cycle(7), Cycle(8)), (Path(10), Path(7))],
)
def test_product_distance_is_sum(left, right):
    g1, g2 = generate(left), generate(right)
    prod = generate(Product(left, right))
    assert prod.n <= 200 and prod.n == g1.n * g2.n
    d1, d2, d = all_pairs_distances(g1).dist, all_pairs_distances(g2).dist, all_pairs_distances(prod).dist
    n2 = g2.n
    for a in range(prod.n):
        for b in range(prod.n):
            assert d[a, b] == d1[a // n2, b // n2] + d2[a % n2, b % n2]


def test_edge_set_validation():
    assert list(EdgeSet([3, 1, 3])) == [1, 3]
    with pytest.raises(ValueError):
        EdgeSet([5], m=5)
