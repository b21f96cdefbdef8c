import io
import random

import pytest
from hypothesis import given, strategies as st

from edgegp.generators import (
    FIG1_EDGES,
    Complete,
    Cycle,
    FamilyError,
    Fig1Example,
    Grid,
    GraphFormatError,
    Hypercube,
    Path,
    Product,
    Star,
    Tree,
    fig1_graph,
    generate,
    graph_to_json,
    layer_edges,
    prufer_to_edges,
    random_prufer,
    read_graph,
    write_graph,
)
from edgegp.graph import all_pairs_distances
from edgegp.theta import is_partial_cube


@pytest.mark.parametrize("r", range(1, 11))
def test_hypercube_sizes(r):
    g = generate(Hypercube(r))
    assert g.n == 2**r and g.m == r * 2 ** (r - 1)


def test_hypercube_adjacency_is_one_bit():
    g = generate(Hypercube(4))
    assert all(bin(u ^ v).count("1") == 1 for u, v in g.edges)


def test_grid_10_7():
    g = generate(Grid(10, 7))
    assert g.n == 70 and g.m == 10 * 6 + 7 * 9 == 123


@pytest.mark.parametrize("r, s", [(2, 2), (3, 5), (5, 4), (10, 7), (1, 4)])
def test_grid_identical_to_path_product(r, s):
    assert generate(Grid(r, s)).edges == generate(Product(Path(r), Path(s))).edges


def test_product_of_two_p2_is_c4():
    prod = generate(Product(Path(2), Path(2)))
    # P2 x P2 numbered g*2 + h is the 4-cycle 0-1-3-2-0
    assert prod.m == 4 and all(prod.degree(v) == 2 for v in range(4))
    relabel = {0: 0, 1: 1, 3: 2, 2: 3}
    assert sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in prod.edges) == list(generate(Cycle(4)).edges)


@pytest.mark.parametrize(
    "bad", [Path(0), Cycle(2), Complete(0), Hypercube(0), Grid(0, 3), Star(0)]
)
def test_invalid_parameters(bad):
    with pytest.raises(FamilyError):
        generate(bad)


def test_fig1():
    g = fig1_graph()
    assert g.n == 12 and g.m == 16
    assert is_partial_cube(g)
    assert g == generate(Fig1Example())
    assert len(FIG1_EDGES) == 16


@pytest.mark.parametrize(
    "spec, which, index, count",
    [(Grid(3, 3), "row", 1, 2), (Grid(10, 7), "column", 2, 6), (Grid(2, 2), "row", 2, 1), (Grid(10, 7), "row", 7, 9)],
)
def test_layer_edges(spec, which, index, count):
    g = generate(spec)
    ids = layer_edges(g, spec, which, index)
    assert len(ids) == count
    # a layer is an isometric path: end-to-end distance equals its edge count
    verts = sorted({v for e in ids for v in g.edges[e]})
    d = all_pairs_distances(g)
    assert d[verts[0], verts[-1]] == count


def test_layers_partition_grid_edges():
    spec = Grid(5, 4)
    g = generate(spec)
    ids = [e for i in range(1, 5) for e in layer_edges(g, spec, "row", i)]
    ids += [e for j in range(1, 6) for e in layer_edges(g, spec, "column", j)]
    assert sorted(ids) == list(range(g.m))


def test_layer_index_out_of_range():
    spec = Grid(3, 3)
    with pytest.raises(IndexError):
        layer_edges(generate(spec), spec, "column", 4)


def test_read_graph_examples():
    p3 = read_graph(io.StringIO('{"n":3,"edges":[[0,1],[1,2]]}'))
    assert p3 == generate(Path(3))
    c4 = read_graph(io.StringIO('{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}'))
    assert c4 == generate(Cycle(4))
    with pytest.raises(GraphFormatError):
        read_graph(io.StringIO("{n: 3, edges"))
    with pytest.raises(GraphFormatError):
        read_graph(io.StringIO('{"n": "3", "edges": []}'))


def test_json_round_trip(tmp_path):
    g = generate(Grid(4, 3))
    path = tmp_path / "g.json"
    write_graph(g, path)
    back = read_graph(path)
    assert back == g and back.edges == g.edges and back.name == g.name
    assert graph_to_json(back) == graph_to_json(g)


def test_prufer_decoding_known():
    # Prüfer (3, 3, 3) on 5 vertices is the star centred at 3
    assert sorted(tuple(sorted(e)) for e in prufer_to_edges([3, 3, 3])) == [(0, 3), (1, 3), (2, 3), (3, 4)]


@given(st.integers(2, 30), st.integers(0, 10**6))
def test_random_trees_are_trees(n, seed):
    t = generate(Tree(prufer=random_prufer(n, random.Random(seed))))
    assert t.n == n and t.m == n - 1


def test_star_is_k1n():
    g = generate(Star(5))
    assert g.n == 6 and g.m == 5 and g.degree(0) == 5


def test_generate_is_deterministic():
    f = Product(Cycle(5), Hypercube(2))
    assert generate(f).edges == generate(f).edges
