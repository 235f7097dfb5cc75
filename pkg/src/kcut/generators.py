"""Instance generators."""
from __future__ import annotations

from itertools import combinations

from kcut.graph import GraphError, Partition, WeightedGraph, boundary_weight
from kcut.rng import stream
from kcut.tree import NotLaminarError, build_mincut_tree


def gen_two_clique(k: int) -> WeightedGraph:
    """K_k with unit weights glued at vertex 0 to K_{k^2} with weights 1/(k+1).

    Small clique: vertices 0..k-1. Big clique: 0 and k..k+k^2-2.
    """
    if k < 2:
        raise GraphError("two-clique instance needs k >= 2")
    small = list(range(k))
    big = [0] + list(range(k, k + k * k - 1))
    edges = [(u, v, 1.0) for u, v in combinations(small, 2)]
    edges += [(u, v, 1.0 / (k + 1)) for u, v in combinations(big, 2)]
    return WeightedGraph(range(k + k * k - 1), edges)


def two_clique_parts(k: int) -> Partition:
    """The optimal k-cut of ``gen_two_clique(k)``: split off the small clique's other vertices."""
    g = gen_two_clique(k)
    big = frozenset([0] + list(range(k, k + k * k - 1)))
    return Partition.of(g, [big] + [[v] for v in range(1, k)])


def gen_random_gnp(
    n: int, p: float, seed: int, *, wmin: int = 1, wmax: int = 10, integer: bool = True
) -> WeightedGraph:
    rng = stream(seed, "gnp")
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            w = int(rng.integers(wmin, wmax + 1)) if integer else float(rng.uniform(wmin, wmax))
            edges.append((u, v, w))
    return WeightedGraph(range(n), edges)


def gen_star_pvc(n: int, seed: int, *, extra_p: float = 0.3) -> WeightedGraph:
    """Star on n vertices plus random chords, mixed real/integer edge and vertex weights."""
    if n < 1:
        raise GraphError("need at least one vertex")
    rng = stream(seed, "star_pvc")
    edges = []
    for v in range(1, n):
        edges.append((0, v, float(rng.integers(1, 6))))
    for u, v in combinations(range(1, n), 2):
        if rng.random() < extra_p:
            edges.append((u, v, float(rng.uniform(0.1, 5.0))))
    vw = {v: float(rng.uniform(0, 3)) for v in range(n) if rng.random() < 0.5}
    return WeightedGraph(range(n), edges, vw)


def _planted_once(k: int, m: int, eps1: float, rng):
    # core: vertices 0..m-1; blob i: m*(i+1)..m*(i+2)-1
    groups = [list(range(j * m, (j + 1) * m)) for j in range(k)]
    core, blobs = groups[0], groups[1:]
    heavy = max(1.0, 3.0 * (1 + eps1) / max(1, m - 1))
    edges = []
    for grp in groups:
        edges += [(u, v, heavy) for u, v in combinations(grp, 2)]
    nb = k - 1
    bounds = [1.0 + 0.9 * eps1 * float(rng.random()) for _ in range(nb)]
    bounds[int(rng.integers(nb))] = 1.0
    cross = [[0.0] * nb for _ in range(nb)]
    xmax = 0.45 * (1 - eps1)
    for i, j in combinations(range(nb), 2):
        if rng.random() < 0.5:
            cross[i][j] = cross[j][i] = float(rng.uniform(0.05, 1.0)) * xmax
    for i in range(nb):
        tot = sum(cross[i])
        if tot > 0.8 * bounds[i]:
            f = 0.8 * bounds[i] / tot
            for j in range(nb):
                cross[i][j] *= f
                cross[j][i] *= f
    for i, j in combinations(range(nb), 2):
        if cross[i][j] > 0:
            u = blobs[i][int(rng.integers(m))]
            v = blobs[j][int(rng.integers(m))]
            edges.append((u, v, cross[i][j]))
    for i in range(nb):
        rest = bounds[i] - sum(cross[i])
        pieces = int(rng.integers(1, min(3, m) + 1))
        for _ in range(pieces):
            u = blobs[i][int(rng.integers(m))]
            v = core[int(rng.integers(m))]
            edges.append((u, v, rest / pieces))
    g = WeightedGraph(range(k * m), edges)
    return g, Partition.of(g, blobs + [core])


def gen_planted_laminar(
    k: int, n_per_part: int, eps1: float, seed: int, *, max_attempts: int = 50
) -> tuple[WeightedGraph, Partition]:
    """k-1 heavy blobs hanging off a heavy core, with light edges between blobs.

    Returns the graph and the planted partition (blobs first, core last).
    Near-mincuts are laminar and every blob boundary is within
    (1 + eps1) of the mincut; both are verified before returning.
    """
    if k < 2 or n_per_part < 1:
        raise GraphError("need k >= 2 and n_per_part >= 1")
    if not 0 < eps1 < 1:
        raise GraphError("eps1 must lie in (0, 1)")
    for attempt in range(max_attempts):
        rng = stream(seed, "planted", attempt)
        g, planted = _planted_once(k, n_per_part, eps1, rng)
        try:
            t = build_mincut_tree(g, eps1)
        except NotLaminarError:
            continue
        lam = t.mincut
        if all(boundary_weight(g, p) <= (1 + eps1) * lam + 1e-9 for p in planted.parts[:-1]):
            return g, planted
    raise GraphError("planted instance failed its self-check")
