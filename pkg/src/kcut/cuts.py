"""Baseline cut algorithms and exact oracles."""
from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from kcut import _kernels
from kcut.graph import (
    TOL,
    Cut,
    GraphError,
    Partition,
    WeightedGraph,
    boundary_weight,
    crosses,
    induced_subgraph,
)

log = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 24
# parts up to this size have all their minimum cuts enumerated for tie-breaking
TIE_ENUM_MAX_N = 20


class CutUndefined(GraphError):
    """The requested cut does not exist (too few vertices)."""


class SizeGuardExceeded(GraphError):
    """Instance too large for an exhaustive routine."""


def oracle_max_n() -> int:
    return int(os.environ.get("KCUT_MAX_ORACLE_N", "20"))


@dataclass(frozen=True)
class CutFamily:
    cuts: tuple[Cut, ...]
    epsilon: float
    mincut: float
    vertices: frozenset[int]

    def __len__(self):
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts)

    def sides(self) -> set[frozenset[int]]:
        return {c.side for c in self.cuts}


def _side_from_mask(g: WeightedGraph, mask: int) -> frozenset[int]:
    vs = g.vertices
    return frozenset(vs[i + 1] for i in range(g.n - 1) if mask >> i & 1)


def _mask_from_side(g: WeightedGraph, side) -> int:
    idx = g.index
    return sum(1 << idx[v] for v in side)


def global_mincut(g: WeightedGraph) -> Cut:
    """Minimum cut by maximum-adjacency orderings (deterministic)."""
    if g.n < 2:
        raise GraphError("mincut needs at least two vertices")
    _, side = _kernels.stoer_wagner(g.dense())
    s = frozenset(v for v, b in zip(g.vertices, side) if b)
    return Cut.of(g, s).canonical(g)


def _sort_key(side: frozenset[int]):
    return (len(side), sorted(side))


def enumerate_near_mincuts(
    g: WeightedGraph,
    epsilon: float,
    *,
    randomized: bool = False,
    seed: int = 0,
    mincut: float | None = None,
) -> CutFamily:
    """All cuts of weight <= (1+epsilon) * mincut, canonically oriented.

    Exhaustive for n <= 24. Larger graphs need ``randomized=True``, which
    collects cuts from repeated random contractions (complete w.h.p.).
    """
    if g.n < 2:
        raise GraphError("need at least two vertices")
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    lam = global_mincut(g).weight if mincut is None else mincut
    bound = (1 + epsilon) * lam
    if g.n <= EXHAUSTIVE_MAX_N:
        slack = 1e-7 * max(1.0, bound)
        masks, _ = _kernels.near_cuts(g.dense(), bound + slack)
        sides = [_side_from_mask(g, int(m)) for m in masks]
    elif randomized:
        sides = _contraction_near_cuts(g, bound, seed)
    else:
        raise SizeGuardExceeded(
            f"exhaustive near-mincut enumeration limited to n <= {EXHAUSTIVE_MAX_N}"
        )
    cuts = []
    for s in sides:
        c = Cut.of(g, s)
        if c.weight <= bound + TOL:
            cuts.append(c)
    cuts.sort(key=lambda c: _sort_key(c.side))
    return CutFamily(tuple(cuts), epsilon, lam, g.vertex_set)


def _contract_once(g: WeightedGraph, target: int, rng: np.random.Generator) -> list[int]:
    """Weighted random contraction down to ``target`` groups; returns labels."""
    n = g.n
    idx = g.index
    eu = np.fromiter((idx[u] for u, _, _ in g.edges), dtype=np.int64, count=g.m)
    ev = np.fromiter((idx[v] for _, v, _ in g.edges), dtype=np.int64, count=g.m)
    ew = np.fromiter((w for _, _, w in g.edges), dtype=float, count=g.m)
    # exponential clocks: processing edges by arrival time is contraction
    # with probability proportional to weight
    with np.errstate(divide="ignore"):
        keys = rng.exponential(size=g.m) / ew
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    groups = n
    for e in np.argsort(keys, kind="stable"):
        if groups <= target:
            break
        if not math.isfinite(keys[e]):
            break
        a, b = find(int(eu[e])), find(int(ev[e]))
        if a != b:
            parent[a] = b
            groups -= 1
    roots = sorted({find(v) for v in range(n)})
    while len(roots) > target:
        parent[roots[-1]] = roots[-2]
        roots.pop()
    relabel = {r: i for i, r in enumerate(sorted({find(v) for v in range(n)}))}
    return [relabel[find(v)] for v in range(n)]


def _contraction_near_cuts(g: WeightedGraph, bound: float, seed: int) -> list[frozenset[int]]:
    rng = np.random.default_rng(seed)
    alpha = bound / max(global_mincut(g).weight, TOL)
    target = max(2, math.ceil(2 * alpha))
    trials = min(200_000, math.ceil(g.n ** (2 * alpha) * math.log(g.n)))
    v0 = g.vertices[0]
    found: set[frozenset[int]] = set()
    for _ in range(trials):
        lab = _contract_once(g, target, rng)
        groups = [frozenset(v for v, l in zip(g.vertices, lab) if l == i) for i in range(target)]
        for r in range(1, target):
            for combo in combinations(range(target), r):
                side = frozenset().union(*(groups[i] for i in combo))
                if v0 in side:
                    continue
                if boundary_weight(g, side) <= bound + TOL:
                    found.add(side)
    return sorted(found, key=_sort_key)


def is_laminar(f: CutFamily) -> bool:
    cuts = list(f.cuts)
    for i in range(len(cuts)):
        for j in range(i + 1, len(cuts)):
            if crosses(cuts[i], cuts[j], f.vertices):
                return False
    return True


def _max_adjacency_order(g: WeightedGraph) -> list[int]:
    a = g.dense()
    n = g.n
    order = [0]
    key = a[0].copy()
    used = np.zeros(n, dtype=bool)
    used[0] = True
    for _ in range(n - 1):
        cand = np.where(used, -1.0, key)
        v = int(np.argmax(cand))
        order.append(v)
        used[v] = True
        key += a[v]
    return order


def exact_kcut_oracle(
    g: WeightedGraph, k: int, *, max_n: int | None = -1, upper: Partition | None = None
) -> Partition:
    """Exact minimum k-partition by branch and bound over set partitions.

    ``max_n=-1`` applies the default guard (``KCUT_MAX_ORACLE_N``, 20);
    ``None`` disables it.
    """
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} out of range for n={g.n}")
    guard = oracle_max_n() if max_n == -1 else max_n
    if guard is not None and g.n > guard:
        raise SizeGuardExceeded(f"oracle limited to n <= {guard} (got {g.n})")
    if k == 1:
        return Partition((g.vertex_set,), 0.0)
    if k == g.n:
        return Partition.of(g, [[v] for v in g.vertices])
    if upper is None:
        upper = complete(g, k, Partition((g.vertex_set,), 0.0))
    order = _max_adjacency_order(g)
    a = g.dense()[np.ix_(order, order)]
    ub = upper.cut_weight * (1 + 1e-9) + 1e-12
    _, labels = _kernels.min_kpartition(a, k, ub)
    if labels is None:
        return upper
    parts: list[list[int]] = [[] for _ in range(k)]
    for pos, lab in enumerate(labels):
        parts[int(lab)].append(g.vertices[order[pos]])
    best = Partition.of(g, parts)
    return best if best.cut_weight < upper.cut_weight else upper


def _four_cut_trials(n: int) -> int:
    # contracting to six groups keeps a fixed min 4-cut w.p. >= 1 / C(n, 6)
    return math.ceil(max(1, math.comb(n, 6)) * math.log(max(n, 2) ** 3)) + 1


def min_four_cut(
    g: WeightedGraph,
    *,
    mode: str = "auto",
    seed: int = 0,
    exact_max_n: int = 14,
    max_trials: int = 200_000,
) -> Partition:
    """Minimum 4-partition.

    ``exact`` enumerates set partitions. ``randomized`` repeats weighted
    random contraction down to six super-vertices, solving each contracted
    graph exactly, until the miss probability is at most 1/n^3 (subject to
    ``max_trials``). ``auto`` picks exact for n <= ``exact_max_n``.
    """
    if g.n < 4:
        raise CutUndefined("min-4-cut needs at least four vertices")
    if mode == "auto":
        mode = "exact" if g.n <= exact_max_n else "randomized"
    if mode == "exact":
        return exact_kcut_oracle(g, 4, max_n=None)
    if mode != "randomized":
        raise ValueError(f"unknown mode {mode!r}")
    if g.n <= 6:
        return exact_kcut_oracle(g, 4, max_n=None)
    rng = np.random.default_rng(seed)
    trials = _four_cut_trials(g.n)
    if trials > max_trials:
        log.warning("min-4-cut: capping %d contraction trials at %d", trials, max_trials)
        trials = max_trials
    a = g.dense()
    best: Partition | None = None
    for _ in range(trials):
        lab = np.asarray(_contract_once(g, 6, rng))
        ind = np.zeros((g.n, 6))
        ind[np.arange(g.n), lab] = 1.0
        q = ind.T @ a @ ind
        np.fill_diagonal(q, 0.0)
        _, qlab = _kernels.min_kpartition(np.ascontiguousarray(q), 4, math.inf)
        parts = [[v for v, l in zip(g.vertices, lab) if qlab[l] == i] for i in range(4)]
        p = Partition.of(g, parts)
        if best is None or p.cut_weight < best.cut_weight:
            best = p
    return best


# -- greedy splitting -------------------------------------------------------


def _min_cuts_of(g: WeightedGraph, tie_break: str) -> Cut:
    """A minimum cut of ``g`` chosen by the tie-break policy."""
    base = global_mincut(g)
    if g.n > TIE_ENUM_MAX_N or g.n == 2:
        return base
    fam = enumerate_near_mincuts(g, 0.0, mincut=base.weight)
    best_w = min(c.weight for c in fam.cuts)
    tied = [c for c in fam.cuts if c.weight <= best_w + TOL]
    if tie_break == "first":
        return min(tied, key=lambda c: sorted(c.side))
    # adversarial: keep the largest piece as large as possible
    return max(tied, key=lambda c: (g.n - len(c.side), -len(c.side), sorted(c.side)))


def complete(
    g: WeightedGraph, k: int, parts, *, tie_break: str = "first"
) -> Partition:
    """Extend a partition to ``k`` parts by repeatedly applying the cheapest
    mincut among the current parts."""
    if tie_break not in ("first", "adversarial"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    if isinstance(parts, Partition):
        parts = parts.parts
    cur = [frozenset(p) for p in parts]
    if k > g.n:
        raise GraphError(f"cannot form {k} parts from {g.n} vertices")
    if len(cur) > k:
        raise GraphError("partition already has more than k parts")
    cache: dict[frozenset[int], Cut] = {}
    while len(cur) < k:
        best_i, best_c = -1, None
        for i, p in enumerate(cur):
            if len(p) < 2:
                continue
            if p not in cache:
                cache[p] = _min_cuts_of(induced_subgraph(g, p), tie_break)
            c = cache[p]
            if best_c is None or c.weight < best_c.weight - TOL:
                best_i, best_c = i, c
            elif tie_break == "adversarial" and c.weight <= best_c.weight + TOL:
                if len(p) > len(cur[best_i]):
                    best_i, best_c = i, c
        p = cur[best_i]
        cur[best_i] = p - best_c.side
        cur.append(best_c.side)
    return Partition.of(g, cur)


def greedy_sv(g: WeightedGraph, k: int, tie_break: str = "first") -> Partition:
    """Iterated cheapest-component mincut splitting (Saran-Vazirani)."""
    if k > g.n:
        raise GraphError(f"k={k} exceeds n={g.n}")
    return complete(g, k, [g.vertex_set], tie_break=tie_break)
