import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcut.generators import gen_two_clique
from kcut.graph import (
    Cut,
    GraphError,
    Partition,
    WeightedGraph,
    boundary_weight,
    contract,
    crosses,
    cut_weight,
    induced_subgraph,
)
from oracles import set_partitions
from samples import complete_graph, path, star, triangle


def test_construction_merges_parallel_and_drops_loops():
    g = WeightedGraph([0, 1, 2], [(0, 1, 1.0), (1, 0, 2.5), (2, 2, 9.0)])
    assert g.edges == ((0, 1, 3.5),)
    assert g.n == 3 and g.m == 1


@pytest.mark.parametrize(
    "edges, vw",
    [([(0, 1, -1.0)], None), ([(0, 1, float("nan"))], None), ([(0, 5, 1.0)], None), ([], {0: -2.0})],
)
def test_construction_rejects_bad_input(edges, vw):
    with pytest.raises(GraphError):
        WeightedGraph([0, 1], edges, vw)


def test_empty_graph_rejected():
    with pytest.raises(GraphError):
        WeightedGraph([])


def test_cut_weight_examples():
    assert cut_weight(triangle(), [[0], [1, 2]]) == 2.0
    assert cut_weight(triangle(), [[0, 1, 2]]) == 0.0
    assert cut_weight(path(3), [[0], [1], [2]]) == 2.0


@pytest.mark.parametrize("parts", [[[0], [1]], [[0, 1], [1, 2]], [[0], [], [1, 2]]])
def test_cut_weight_rejects_non_partitions(parts):
    with pytest.raises(GraphError):
        cut_weight(triangle(), parts)


def test_boundary_weight_examples():
    assert boundary_weight(triangle(), {0}) == 2.0
    assert boundary_weight(path(3), {0, 1}) == 1.0
    assert boundary_weight(star(3), {0}) == 3.0
    for bad in (set(), {0, 1, 2}):
        with pytest.raises(GraphError):
            boundary_weight(triangle(), bad)


def test_induced_subgraph():
    h = induced_subgraph(triangle(), {1, 2})
    assert h.vertices == (1, 2) and h.edges == ((1, 2, 1.0),)
    g = triangle()
    assert induced_subgraph(g, g.vertex_set) == g
    with pytest.raises(GraphError):
        induced_subgraph(g, set())
    small = induced_subgraph(gen_two_clique(3), {0, 1, 2})
    assert small == complete_graph(3)


def test_induced_subgraph_keeps_vertex_weights():
    g = WeightedGraph([0, 1, 2], [(0, 1, 1.0)], {1: 4.0, 2: 1.0})
    assert induced_subgraph(g, {1, 2}).vertex_weights == {1: 4.0, 2: 1.0}


def test_contract_examples():
    h, back = contract(path(3), [{0, 1}])
    assert h.n == 2 and h.edges == ((0, 1, 1.0),)
    assert back == {0: frozenset({0, 1}), 1: frozenset({2})}
    h, _ = contract(triangle(), [{0, 1}])
    assert h.edges == ((0, 1, 2.0),)
    h, back = contract(triangle(), [])
    assert h == triangle() and back == {i: frozenset({i}) for i in range(3)}
    with pytest.raises(GraphError):
        contract(triangle(), [{0, 1}, {1, 2}])


def test_contract_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(3, 9)
        g = WeightedGraph(range(n), [(u, v, 1.0) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        vs = list(range(n))
        rng.shuffle(vs)
        groups = [set(vs[:2]), set(vs[2:4])] if n >= 4 else [set(vs[:2])]
        h, back = contract(g, groups)
        assert sorted(v for grp in back.values() for v in grp) == list(range(n))
        # a cut of h pulls back to a cut of g with the same weight
        side = {0}
        orig = set().union(*(back[x] for x in side))
        if orig != set(range(n)):
            assert boundary_weight(h, side) == pytest.approx(boundary_weight(g, orig))


def test_crosses():
    vs = {1, 2, 3, 4}
    assert not crosses({1}, {1, 2}, vs)
    assert crosses({1, 2}, {2, 3}, vs)
    assert not crosses({1}, {2}, vs)
    assert not crosses({1, 2}, {3, 4}, vs)


def test_cut_canonical_avoids_smallest_vertex():
    g = path(4)
    c = Cut.of(g, {0, 1}).canonical(g)
    assert c.side == frozenset({2, 3}) and c.weight == 1.0


def test_partition_canonical_and_lists():
    g = path(4)
    p = Partition.of(g, [[3, 2], [0], [1]])
    assert p.as_lists() == [[0], [1], [2, 3]]
    assert p.cut_weight == 2.0


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v, draw(st.integers(1, 9)) / 2))
    return WeightedGraph(range(n), edges)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_cut_weight_is_half_boundary_sum(g, data):
    k = data.draw(st.integers(1, g.n))
    lab = data.draw(st.lists(st.integers(0, k - 1), min_size=g.n, max_size=g.n))
    parts = [[v for v in g.vertices if lab[v] == i] for i in range(k)]
    parts = [p for p in parts if p]
    w = cut_weight(g, parts)
    if len(parts) > 1:
        assert w == pytest.approx(sum(boundary_weight(g, p) for p in parts) / 2, abs=1e-12)
    # permutation invariance
    assert cut_weight(g, list(reversed(parts))) == w


def test_cut_weight_matches_direct_count_over_all_partitions():
    g = WeightedGraph(range(5), [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (3, 4, 4.0), (0, 4, 0.5)])
    for k in range(1, 6):
        for lab in set_partitions(g.vertices, k):
            parts = [[v for v in g.vertices if lab[v] == i] for i in range(k)]
            direct = sum(w for u, v, w in g.edges if lab[u] != lab[v])
            assert cut_weight(g, parts) == pytest.approx(direct)
