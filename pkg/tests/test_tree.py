import random

import pytest

from kcut.cuts import enumerate_near_mincuts
from kcut.generators import gen_planted_laminar
from kcut.graph import GraphError, boundary_weight
from kcut.tree import (
    NotLaminarError,
    build_mincut_tree,
    complement_nonempty,
    pairwise_saved,
    partition_from_selection,
    saved,
)
from oracles import brute_near_cuts, tree_cut_sides
from samples import cycle, g_star, path, triangle


def node_of(t, v):
    return t.phi[v]


def test_g_star_tree():
    g = g_star()
    t = build_mincut_tree(g, 0.25)
    x, y, z = (node_of(t, v) for v in (1, 2, 3))
    assert node_of(t, 0) == t.root
    assert set(t.children(t.root)) == {x, y, z}
    assert t.edge_weight[x] == pytest.approx(1.2)
    assert t.edge_weight[y] == pytest.approx(1.2)
    assert t.edge_weight[z] == pytest.approx(1.0)
    assert saved(g, t, [x, y]) == pytest.approx(0.2)
    assert saved(g, t, [x]) == 0.0
    assert saved(g, t, [x, z]) == 0.0


def test_g_star_partitions_from_selection():
    g = g_star()
    t = build_mincut_tree(g, 0.25)
    x, y, z = (node_of(t, v) for v in (1, 2, 3))
    p = partition_from_selection(g, t, [x, y])
    assert sorted(map(sorted, p.parts)) == [[0, 3], [1], [2]]
    assert p.cut_weight == pytest.approx(2.2)
    p = partition_from_selection(g, t, [x, y, z])
    assert p.cut_weight == pytest.approx(3.2)


def test_path_chain():
    g = path(4)
    t = build_mincut_tree(g, 0.0)
    assert len(t.nodes) == 4
    assert all(len(t.children(a)) <= 1 for a in t.nodes)
    assert all(t.edge_weight[a] == 1.0 for a in t.non_root())
    leaf = [a for a in t.nodes if not t.children(a)][0]
    p = partition_from_selection(g, t, [leaf])
    assert p.cut_weight == 1.0 and len(p) == 2
    # the path's endpoint opposite vertex 0 sits at the deepest node
    assert node_of(t, 3) == leaf


def test_path_reroot_at_far_end_gives_listed_cuts():
    g = path(4)
    t = build_mincut_tree(g, 0.0).reroot(build_mincut_tree(g, 0.0).phi[3])
    assert set(t.cuts()) == {frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2})}


def test_triangle_is_laminar_star():
    t = build_mincut_tree(triangle(), 0.0)
    # rooted at the empty center the tree is a star with one leaf per vertex
    center = [a for a in t.nodes if not t.hosted(a)]
    assert len(center) == 1
    s = t.reroot(center[0])
    assert len(s.children(s.root)) == 3 and all(not s.children(a) for a in s.non_root())
    assert sorted(len(s.hosted(a)) for a in s.non_root()) == [1, 1, 1]
    sides = tree_cut_sides(t.parent, t.root, t.phi)
    assert sides == {frozenset({1}), frozenset({2}), frozenset({1, 2})}
    assert all(t.edge_weight[a] == 2.0 for a in t.non_root())


def test_crossing_family_rejected():
    with pytest.raises(NotLaminarError, match="not laminar"):
        build_mincut_tree(cycle(5), 0.0)


def test_saved_rejects_comparable_or_root():
    g = path(4)
    t = build_mincut_tree(g, 0.0)
    a = t.non_root()
    with pytest.raises(GraphError):
        saved(g, t, a[:2])
    with pytest.raises(GraphError):
        saved(g, t, [t.root])


def test_empty_complement_rejected():
    g = g_star()
    t = build_mincut_tree(g, 0.25)
    r = t.reroot(node_of(t, 1))
    everything = list(r.children(r.root))
    assert not complement_nonempty(r, everything) or len(everything) == 1
    if not complement_nonempty(r, everything):
        with pytest.raises(GraphError):
            partition_from_selection(g, r, everything)


@pytest.mark.parametrize("seed", range(10))
def test_tree_equals_near_mincut_family(seed):
    g, _ = gen_planted_laminar(4 + seed % 3, 2, 0.05, seed)
    t = build_mincut_tree(g, 0.05)
    sides = tree_cut_sides(t.parent, t.root, t.phi)
    assert sides == set(brute_near_cuts(g, 0.05))
    for a in t.non_root():
        w = boundary_weight(g, t.vertices_under(a))
        assert t.edge_weight[a] == pytest.approx(w, abs=1e-9)
        assert t.mincut - 1e-9 <= w <= 1.05 * t.mincut + 1e-9


@pytest.mark.parametrize("seed", range(5))
def test_reroot_preserves_family(seed):
    g, _ = gen_planted_laminar(5, 2, 0.05, 100 + seed)
    t = build_mincut_tree(g, 0.05)
    allv = g.vertex_set

    def bip(tr):
        return {frozenset([s, allv - s]) for s in tr.cuts()}

    base = bip(t)
    for r in t.nodes:
        tr = t.reroot(r)
        assert tr.root == r
        assert bip(tr) == base


@pytest.mark.parametrize("seed", range(6))
def test_saved_identity_and_pairwise(seed):
    g, _ = gen_planted_laminar(6, 2, 0.05, 200 + seed)
    t = build_mincut_tree(g, 0.05)
    rng = random.Random(seed)
    for r in t.nodes:
        tr = t.reroot(r)
        nodes = tr.non_root()
        for _ in range(10):
            rng.shuffle(nodes)
            sel = []
            for a in nodes:
                if all(not tr.comparable(a, b) for b in sel):
                    sel.append(a)
                if len(sel) == rng.randint(1, 4):
                    break
            if not complement_nonempty(tr, sel):
                continue
            p = partition_from_selection(g, tr, sel)
            total = sum(tr.edge_weight[a] for a in sel)
            assert p.cut_weight == pytest.approx(total - saved(g, tr, sel), abs=1e-9)
            assert sum(pairwise_saved(g, tr, sel).values()) == pytest.approx(saved(g, tr, sel))


def test_dump_format():
    t = build_mincut_tree(g_star(), 0.25)
    lines = t.dump().splitlines()
    tl = [ln.split() for ln in lines if ln.startswith("t ")]
    ml = [ln.split() for ln in lines if ln.startswith("m ")]
    assert len(tl) == len(t.nodes) and len(ml) == 4
    root = [x for x in tl if x[2] == "-1"]
    assert len(root) == 1 and int(root[0][1]) == t.root
    assert {int(x[1]): float(x[3]) for x in tl if x[2] != "-1"} == pytest.approx(t.edge_weight)


def test_accessors():
    t = build_mincut_tree(path(5), 0.0)
    leaf = [a for a in t.nodes if not t.children(a)][0]
    assert t.anc(leaf)[-1] == t.root or t.root in t.anc(leaf)
    assert len(t.anc(leaf)) == t.depth(leaf)
    assert leaf in t.desc(t.root)
    assert t.is_ancestor(t.root, leaf) and not t.is_ancestor(leaf, t.root)
    assert set(t.subtree(t.root)) == set(t.nodes)
    assert t.vertices_under(t.root) == frozenset(range(5))
    assert set(enumerate_near_mincuts(path(5), 0.0).sides()) == set(t.cuts())
