import random

import pytest
from hypothesis import given, settings, strategies as st

from edgegp.constructions import formula_gpe, pendant_edge_witness, semi_boundary_edges
from edgegp.generators import Complete, Cycle, Grid, Hypercube, Path, Tree, fig1_graph, generate, random_prufer
from edgegp.geodesy import is_edge_gp
from edgegp.graph import all_pairs_distances, build_graph
from edgegp.solver import (
    LOWER_BOUND_ONLY,
    OPTIMAL,
    Budget,
    enumerate_optima,
    gpe_exact,
    greedy_witness,
)

from support import brute_force_gpe, brute_force_optima, connected_graphs


def _solve(g, **kw):
    d = all_pairs_distances(g)
    return gpe_exact(g, d, **kw), d


def test_greedy_examples():
    g = generate(Complete(4))
    assert list(greedy_witness(g, all_pairs_distances(g))) == list(range(6))
    g = generate(Path(4))
    assert list(greedy_witness(g, all_pairs_distances(g))) == [0, 1]


@pytest.mark.parametrize("seed", range(5))
def test_greedy_pendant_first(seed):
    t = generate(Tree(prufer=random_prufer(14, random.Random(seed))))
    pend = pendant_edge_witness(t)
    assert greedy_witness(t, all_pairs_distances(t), order=list(pend)) == pend


@pytest.mark.parametrize(
    "g, value",
    [(generate(Cycle(6)), 4), (generate(Hypercube(3)), 8), (fig1_graph(), 8), (generate(Grid(3, 3)), 6)],
    ids=["C6", "Q3", "fig1", "grid3x3"],
)
def test_exact_examples(g, value):
    r, d = _solve(g)
    assert r.value == value and r.status == OPTIMAL
    assert r.lower_bound == r.upper_bound == value == len(r.witness)
    assert is_edge_gp(r.witness, g, d)


def test_c7_k4_takes_everything():
    r, _ = _solve(generate(Cycle(7)), k=4)
    assert r.value == 7 and r.optimal


def test_k_equals_two():
    # k=2: no two chosen edges share a geodesic
    g = generate(Path(5))
    r, _ = _solve(g, k=2)
    assert r.value == 1


@settings(max_examples=50, deadline=None)
@given(connected_graphs(max_n=7, max_extra=5))
def test_matches_brute_force(g):
    if g.m > 12:
        return
    r, d = _solve(g)
    assert r.optimal
    assert r.value == brute_force_gpe(g)
    assert is_edge_gp(r.witness, g, d)
    # no single-edge extension of the witness stays in general position
    if r.value < g.m:
        for e in set(range(g.m)) - set(r.witness):
            assert not is_edge_gp(list(r.witness) + [e], g, d)


@settings(max_examples=25, deadline=None)
@given(connected_graphs(max_n=7, max_extra=4), st.sampled_from([2, 4]))
def test_matches_brute_force_other_k(g, k):
    if g.m > 11:
        return
    r, _ = _solve(g, k=k)
    assert r.value == brute_force_gpe(g, k)


@settings(max_examples=25, deadline=None)
@given(connected_graphs(max_n=6, max_extra=4))
def test_enumeration_matches_brute_force(g):
    if g.m > 10:
        return
    d = all_pairs_distances(g)
    res = enumerate_optima(g, d)
    assert res.complete
    assert [tuple(o) for o in res.optima] == brute_force_optima(g)


def test_enumeration_p3():
    g = generate(Path(3))
    res = enumerate_optima(g, all_pairs_distances(g))
    assert res.complete and [list(o) for o in res.optima] == [[0, 1]]


def test_enumeration_grid_4x4():
    g = generate(Grid(4, 4))
    res = enumerate_optima(g, all_pairs_distances(g))
    assert res.complete and res.value == 8 and len(res.optima) > 1
    assert semi_boundary_edges(4, 4) in res.optima


def test_budget_limited_status():
    g = generate(Grid(5, 5))
    d = all_pairs_distances(g)
    r = gpe_exact(g, d, budget=Budget(max_nodes=3))
    assert r.status == LOWER_BOUND_ONLY
    assert r.lower_bound == len(r.witness) == 12 <= r.upper_bound
    assert is_edge_gp(r.witness, g, d)
    res = enumerate_optima(g, d, budget=Budget(max_nodes=3))
    assert not res.complete


def test_budget_hit_without_constructions():
    # an unrecognized graph with a weak seed: a 1-node budget cannot finish
    edges = [(u, v) for u, v in generate(Grid(4, 5)).edges] + [(0, 19)]
    g = build_graph(20, edges)
    d = all_pairs_distances(g)
    r = gpe_exact(g, d, budget=Budget(max_nodes=1))
    assert r.status == LOWER_BOUND_ONLY
    assert r.lower_bound == len(r.witness) <= r.value <= r.upper_bound
    full = gpe_exact(g, d)
    assert full.optimal and r.upper_bound >= full.value >= r.lower_bound


def test_determinism():
    g = generate(Grid(4, 3))
    a, _ = _solve(g)
    b, _ = _solve(g)
    assert a.to_dict() == b.to_dict()


@pytest.mark.parametrize("n", range(3, 11))
def test_cycles(n):
    r, _ = _solve(generate(Cycle(n)))
    assert r.value == formula_gpe(Cycle(n))


def test_report_dict_has_edges():
    g = generate(Cycle(6))
    r, _ = _solve(g)
    out = r.to_dict(g)
    assert out["witness_edges"] == [list(g.edges[e]) for e in r.witness]
