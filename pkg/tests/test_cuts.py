import random

import pytest

from kcut.cuts import (
    CutFamily,
    CutUndefined,
    SizeGuardExceeded,
    _contraction_near_cuts,
    complete,
    enumerate_near_mincuts,
    exact_kcut_oracle,
    global_mincut,
    greedy_sv,
    is_laminar,
    min_four_cut,
)
from kcut.generators import gen_random_gnp, gen_two_clique
from kcut.graph import Cut, GraphError, Partition, WeightedGraph
from oracles import brute_kcut, brute_mincut, brute_near_cuts
from samples import complete_graph, cycle, g_star, path, triangle


def test_global_mincut_examples():
    assert global_mincut(triangle()).weight == 2.0
    assert global_mincut(path(3)).weight == 1.0
    assert global_mincut(WeightedGraph([1, 2], [(1, 2, 7.0)])).weight == 7.0
    with pytest.raises(GraphError):
        global_mincut(WeightedGraph([0]))


def test_global_mincut_disconnected():
    g = WeightedGraph(range(4), [(0, 1, 3.0), (2, 3, 3.0)])
    c = global_mincut(g)
    assert c.weight == 0.0 and c.side == {2, 3}


def test_global_mincut_random_against_brute_force():
    for seed in range(60):
        g = gen_random_gnp(random.Random(seed).randint(2, 9), 0.5, seed)
        assert global_mincut(g).weight == brute_mincut(g)


def test_min_four_cut_examples():
    assert min_four_cut(path(4)).cut_weight == 3.0
    assert min_four_cut(complete_graph(5)).cut_weight == 9.0
    assert min_four_cut(cycle(5)).cut_weight == 4.0
    with pytest.raises(CutUndefined):
        min_four_cut(triangle())


def test_min_four_cut_randomized_mode():
    g = gen_random_gnp(8, 0.6, 11)
    exact = brute_kcut(g, 4)
    p = min_four_cut(g, mode="randomized", seed=5)
    assert len(p) == 4 and p.cut_weight == pytest.approx(exact)
    with pytest.raises(ValueError):
        min_four_cut(g, mode="nope")


def test_exact_oracle_examples():
    assert exact_kcut_oracle(triangle(), 2).cut_weight == 2.0
    g = gen_random_gnp(7, 0.5, 2)
    assert exact_kcut_oracle(g, 1).cut_weight == 0.0
    assert exact_kcut_oracle(g, g.n).cut_weight == pytest.approx(g.total_weight())
    with pytest.raises(GraphError):
        exact_kcut_oracle(g, 0)
    with pytest.raises(GraphError):
        exact_kcut_oracle(g, 8)


@pytest.mark.parametrize("seed", range(25))
def test_exact_oracle_against_set_partitions(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 8)
    g = gen_random_gnp(n, rng.choice([0.3, 0.6, 0.9]), seed)
    for k in range(2, min(n, 5) + 1):
        p = exact_kcut_oracle(g, k)
        assert len(p) == k
        assert p.cut_weight == pytest.approx(brute_kcut(g, k), abs=1e-9)


def test_oracle_size_guard(monkeypatch):
    g = gen_random_gnp(12, 0.3, 1)
    monkeypatch.setenv("KCUT_MAX_ORACLE_N", "10")
    with pytest.raises(SizeGuardExceeded):
        exact_kcut_oracle(g, 3)
    assert len(exact_kcut_oracle(g, 3, max_n=None)) == 3


def test_two_clique_greedy_values():
    # greedy "first" cuts small-clique vertices: 2 then 1
    assert greedy_sv(gen_two_clique(3), 3).cut_weight == 3.0
    assert greedy_sv(gen_two_clique(4), 4).cut_weight == 6.0
    # adversarial splits singletons off the big clique: 2 + 1.75
    assert greedy_sv(gen_two_clique(3), 3, "adversarial").cut_weight == pytest.approx(3.75)
    assert greedy_sv(gen_two_clique(4), 4, "adversarial").cut_weight == pytest.approx(8.4)


def test_greedy_trivial_and_errors():
    g = triangle()
    p = greedy_sv(g, 1)
    assert p.parts == (g.vertex_set,) and p.cut_weight == 0.0
    with pytest.raises(GraphError):
        greedy_sv(g, 4)
    with pytest.raises(ValueError):
        greedy_sv(g, 2, "random")


def test_near_mincuts_examples():
    f = enumerate_near_mincuts(g_star(), 0.25)
    assert {(c.side, c.weight) for c in f} == {
        (frozenset({3}), 1.0), (frozenset({1}), 1.2), (frozenset({2}), 1.2)
    }
    f = enumerate_near_mincuts(triangle(), 0.0)
    assert len(f) == 3 and all(c.weight == 2.0 for c in f)
    # path 0-1-2-3: cuts {0}, {0,1}, {0,1,2} as bipartitions
    f = enumerate_near_mincuts(path(4), 0.0)
    bip = {frozenset([c.side, frozenset(range(4)) - c.side]) for c in f}
    want = {frozenset([frozenset(s), frozenset(range(4)) - frozenset(s)]) for s in ({0}, {0, 1}, {0, 1, 2})}
    assert bip == want


@pytest.mark.parametrize("seed", range(20))
def test_near_mincuts_against_brute_force(seed):
    rng = random.Random(seed)
    g = gen_random_gnp(rng.randint(2, 10), 0.6, seed, wmin=1, wmax=4)
    for eps in (0.0, 0.3, 1.0):
        f = enumerate_near_mincuts(g, eps)
        want = brute_near_cuts(g, eps)
        assert {c.side: c.weight for c in f} == pytest.approx(want)


def test_near_mincuts_monotone_and_exact_at_zero():
    g = gen_random_gnp(9, 0.5, 4)
    lam = global_mincut(g).weight
    prev = set()
    for eps in (0.0, 0.1, 0.5, 1.0, 2.0):
        cur = enumerate_near_mincuts(g, eps).sides()
        assert prev <= cur
        prev = cur
    assert all(c.weight == lam for c in enumerate_near_mincuts(g, 0.0))


def test_near_mincuts_guards():
    with pytest.raises(GraphError):
        enumerate_near_mincuts(WeightedGraph([0]), 0.1)
    with pytest.raises(ValueError):
        enumerate_near_mincuts(triangle(), -0.1)
    big = path(26)
    with pytest.raises(SizeGuardExceeded):
        enumerate_near_mincuts(big, 0.0)
    f = enumerate_near_mincuts(big, 0.0, randomized=True, seed=1)
    assert len(f) == 25


def test_contraction_near_cuts_small_graph():
    g = gen_random_gnp(8, 0.7, 9)
    lam = brute_mincut(g)
    found = set(_contraction_near_cuts(g, 1.2 * lam, seed=3))
    assert found == set(brute_near_cuts(g, 0.2))


def test_is_laminar():
    vs = frozenset({1, 2, 3, 4})
    g = WeightedGraph(vs, [(1, 2, 1), (2, 3, 1), (3, 4, 1)])

    def fam(*sides):
        return CutFamily(tuple(Cut.of(g, s) for s in sides), 0.0, 1.0, vs)

    assert is_laminar(fam({1}, {1, 2}))
    assert not is_laminar(fam({1, 2}, {2, 3}))
    assert is_laminar(fam())


def test_complete_examples():
    g = path(3)
    p = complete(g, 3, [[0], [1, 2]])
    assert sorted(map(sorted, p.parts)) == [[0], [1], [2]]
    assert p.cut_weight - Partition.of(g, [[0], [1, 2]]).cut_weight == 1.0
    q = Partition.of(g, [[0], [1], [2]])
    assert complete(g, 3, q).parts == q.parts
    tc = gen_two_clique(3)
    for tb in ("first", "adversarial"):
        assert complete(tc, 3, [tc.vertex_set], tie_break=tb) == greedy_sv(tc, 3, tb)
    with pytest.raises(GraphError):
        complete(g, 4, [g.vertex_set])
