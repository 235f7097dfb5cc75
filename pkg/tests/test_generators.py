from itertools import combinations

import pytest

from kcut.cuts import exact_kcut_oracle
from kcut.generators import (
    gen_planted_laminar,
    gen_random_gnp,
    gen_star_pvc,
    gen_two_clique,
    two_clique_parts,
)
from kcut.graph import GraphError, boundary_weight
from kcut.tree import build_mincut_tree


def test_two_clique_shape():
    g = gen_two_clique(3)
    assert g.n == 11 and g.m == 39
    g4 = gen_two_clique(4)
    assert g4.n == 19 and g4.m == 6 + 120
    with pytest.raises(GraphError):
        gen_two_clique(1)


def test_two_clique_optimum():
    assert exact_kcut_oracle(gen_two_clique(3), 3).cut_weight == 3.0
    assert two_clique_parts(3).cut_weight == 3.0
    assert two_clique_parts(4).cut_weight == 6.0


@pytest.mark.parametrize("k,m,seed", [(2, 3, 0), (4, 2, 1), (5, 3, 2), (6, 4, 7)])
def test_planted_self_check(k, m, seed):
    eps1 = 0.05
    g, planted = gen_planted_laminar(k, m, eps1, seed)
    assert g.n == k * m and len(planted) == k
    t = build_mincut_tree(g, eps1)
    for part in planted.parts[:-1]:
        assert boundary_weight(g, part) <= (1 + eps1) * t.mincut + 1e-9


def test_planted_weight_is_boundaries_minus_double_counts():
    g, planted = gen_planted_laminar(6, 4, 0.05, 7)
    blobs = planted.parts[:-1]
    total = sum(boundary_weight(g, b) for b in blobs)
    between = sum(
        w for u, v, w in g.edges
        for a, b in combinations(blobs, 2) if (u in a and v in b) or (u in b and v in a)
    )
    assert planted.cut_weight == pytest.approx(total - between)


def test_planted_validation():
    with pytest.raises(GraphError):
        gen_planted_laminar(1, 3, 0.05, 0)
    with pytest.raises(GraphError):
        gen_planted_laminar(3, 3, 0.0, 0)


def test_generators_are_seeded():
    assert gen_random_gnp(8, 0.5, 3).edges == gen_random_gnp(8, 0.5, 3).edges
    assert gen_star_pvc(8, 3).edges == gen_star_pvc(8, 3).edges
    assert gen_random_gnp(8, 0.5, 3).edges != gen_random_gnp(8, 0.5, 4).edges
