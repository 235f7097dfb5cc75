"""Minimum partial vertex cover: exact oracle and an FPT approximation scheme.

The objective of a vertex set S is the weight of edges touching S plus the
vertex weights of S.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from kcut import _kernels
from kcut.graph import TOL, GraphError, WeightedGraph

log = logging.getLogger(__name__)

DEFAULT_MAX_TRIALS = 1 << 16
BRUTEFORCE_BUDGET = 10**7


@dataclass(frozen=True)
class PvcInstance:
    graph: WeightedGraph
    k: int
    delta: float = 0.1

    def __post_init__(self):
        if not 1 <= self.k <= self.graph.n:
            raise GraphError(f"k={self.k} out of range for n={self.graph.n}")
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")


@dataclass(frozen=True)
class PvcSolution:
    chosen: frozenset[int]
    value: float


@dataclass(frozen=True)
class ComponentType:
    size: int
    cost: int
    count: int


def pvc_value(g: WeightedGraph, s) -> float:
    s = frozenset(s)
    return math.fsum(
        [w for u, v, w in g.edges if u in s or v in s]
        + [g.vertex_weight(v) for v in s]
    )


def _better(a: PvcSolution | None, b: PvcSolution) -> bool:
    if a is None:
        return True
    if b.value < a.value - TOL:
        return True
    return abs(b.value - a.value) <= TOL and sorted(b.chosen) < sorted(a.chosen)


def pvc_bruteforce(inst: PvcInstance, budget: int = BRUTEFORCE_BUDGET) -> PvcSolution:
    g, k = inst.graph, inst.k
    if math.comb(g.n, k) > budget:
        raise GraphError(f"C({g.n},{k}) subsets exceed the budget {budget}")
    best = None
    for combo in combinations(g.vertices, k):
        cand = PvcSolution(frozenset(combo), pvc_value(g, combo))
        if _better(best, cand):
            best = cand
    return best


# -- bounded integer weights ------------------------------------------------


def _red_components(g: WeightedGraph, red: frozenset[int]):
    """Connected components of G[red] with their size and incident cost."""
    adj = g.adjacency
    comp: dict[int, int] = {}
    groups: list[list[int]] = []
    for v in sorted(red):
        if v in comp:
            continue
        cid = len(groups)
        stack, members = [v], []
        comp[v] = cid
        while stack:
            x = stack.pop()
            members.append(x)
            for y in adj[x]:
                if y in red and y not in comp:
                    comp[y] = cid
                    stack.append(y)
        groups.append(sorted(members))
    cost = [0] * len(groups)
    for u, v, w in g.edges:
        if u in comp:
            cost[comp[u]] += int(w)
        elif v in comp:
            cost[comp[v]] += int(w)
    return [(grp, len(grp), c) for grp, c in zip(groups, cost)]


def color_coding_trial(
    g: WeightedGraph,
    k: int,
    tau: float,
    seed: int | None = None,
    *,
    red=None,
    blue=frozenset(),
) -> PvcSolution | None:
    """One red/blue coloring followed by the component-type DP.

    ``red`` fixes the red set instead of sampling it; vertices in ``blue``
    are never red. Value is the objective in ``g``.
    """
    if red is None:
        rng = np.random.default_rng(seed)
        coins = rng.integers(0, 2, size=g.n)
        red = frozenset(v for v, c in zip(g.vertices, coins) if c and v not in blue)
    else:
        red = frozenset(red) - frozenset(blue)
    comps = [c for c in _red_components(g, red) if c[1] <= k and c[2] <= tau]
    types: dict[tuple[int, int], list[list[int]]] = {}
    for grp, s, c in comps:
        types.setdefault((s, c), []).append(grp)
    table = [
        ComponentType(s, c, min(len(types[(s, c)]), k)) for s, c in sorted(types)
    ]
    # C[i][j]: min cost using types < i with total size j; choice[i][j] = copies of type i-1
    inf = math.inf
    C = [[0] + [inf] * k]
    choice = [[0] * (k + 1)]
    for t in table:
        prev = C[-1]
        row, ch = [inf] * (k + 1), [0] * (k + 1)
        for j in range(k + 1):
            for ell in range(0, t.count + 1):
                if ell * t.size > j:
                    break
                val = prev[j - ell * t.size] + ell * t.cost
                if val < row[j]:
                    row[j], ch[j] = val, ell
        C.append(row)
        choice.append(ch)
    if C[-1][k] == inf:
        return None
    chosen: list[int] = []
    j = k
    for i in range(len(table), 0, -1):
        t = table[i - 1]
        ell = choice[i][j]
        for grp in types[(t.size, t.cost)][:ell]:
            chosen.extend(grp)
        j -= ell * t.size
    s = frozenset(chosen)
    return PvcSolution(s, pvc_value(g, s))


def _trial_count(n: int, tau: float, k: int, safety: float = 4.0) -> float:
    expo = tau + k
    if expo > 1000:
        return math.inf
    return math.ceil(2.0**expo * math.log(max(n, 2) * safety))


def pvc_bounded(
    g: WeightedGraph,
    k: int,
    delta: float,
    seed: int = 0,
    *,
    M: int | None = None,
    exclude=frozenset(),
    max_trials: int = DEFAULT_MAX_TRIALS,
) -> PvcSolution:
    """(1+delta)-approximate partial VC for integer edge weights in [1, M].

    Vertices in ``exclude`` are never chosen (they are kept blue).
    """
    exclude = frozenset(exclude)
    if g.vertex_weights:
        raise GraphError("bounded variant takes no vertex weights")
    wmax = 0
    for u, v, w in g.edges:
        if w != int(w) or w < 1:
            raise GraphError(f"edge ({u}, {v}) weight {w} is not a positive integer")
        wmax = max(wmax, int(w))
    if M is None:
        M = max(wmax, 1)
    elif wmax > M:
        raise GraphError(f"edge weight {wmax} exceeds M={M}")
    free = [v for v in g.vertices if v not in exclude]
    if len(free) < k:
        raise GraphError("fewer than k selectable vertices")
    tau = M * k * k / delta

    # large optimum: the k smallest weighted degrees
    by_deg = sorted(free, key=lambda v: (g.weighted_degree(v), v))
    s = frozenset(by_deg[:k])
    best = PvcSolution(s, pvc_value(g, s))

    order = free + [v for v in g.vertices if v in exclude]
    pos = {v: i for i, v in enumerate(order)}
    eu = np.array([pos[u] for u, _, _ in g.edges], dtype=np.int64)
    ev = np.array([pos[v] for _, v, _ in g.edges], dtype=np.int64)
    ew = np.array([int(w) for _, _, w in g.edges], dtype=np.int64)
    n_free = len(free)
    masks = None
    if n_free > 62 or (1 << n_free) > max_trials:
        trials = _trial_count(g.n, tau, k)
        if trials > max_trials:
            log.debug("partial VC: %s trials needed, capped at %d", trials, max_trials)
            trials = max_trials
        if n_free > 62:
            log.warning("partial VC: %d free vertices, color coding skipped", n_free)
            return best
        rng = np.random.default_rng(seed)
        masks = rng.integers(0, 1 << n_free, size=int(trials), dtype=np.int64)
    cost, mask = _kernels.pvc_best_coloring(g.n, n_free, eu, ev, ew, k, tau, masks)
    if mask >= 0:
        red = frozenset(order[i] for i in range(n_free) if mask >> i & 1)
        sol = color_coding_trial(g, k, tau, red=red, blue=exclude)
        if sol is not None and _better(best, sol):
            best = sol
    return best


# -- general weights --------------------------------------------------------


def extended_degree(g: WeightedGraph, v: int) -> float:
    return g.vertex_weight(v) + g.weighted_degree(v)


@dataclass(frozen=True)
class ReducedInstance:
    """Bounded-weight instance built for one guess of the heaviest optimum vertex."""

    graph: WeightedGraph
    survivors: tuple[int, ...]  # H vertex i is original survivors[i]
    p: int
    q: int
    M: int
    L: float
    delta_prime: float


def build_reduced(g: WeightedGraph, k: int, delta: float, v_star: int) -> ReducedInstance | None:
    dp = delta / 4
    wdeg = {v: extended_degree(g, v) for v in g.vertices}
    L = wdeg[v_star]
    if L <= 0:
        return None
    keep = [v for v in g.vertices if wdeg[v] <= L + TOL]
    if len(keep) < k:
        return None
    kept = set(keep)
    hid = {v: i for i, v in enumerate(keep)}
    p, q = len(keep), len(keep) + 1
    vw = [g.vertex_weight(v) for v in keep]
    small = L * dp / k**2
    edges: dict[tuple[int, int], float] = {}
    for u, v, w in g.edges:
        if u in kept and v in kept:
            if w < small:
                vw[hid[u]] += w
                vw[hid[v]] += w
            else:
                edges[(hid[u], hid[v])] = w
        elif u in kept:
            # edge to a deleted vertex still hits u
            vw[hid[u]] += w
        elif v in kept:
            vw[hid[v]] += w
    for i, w in enumerate(vw):
        if w >= L * dp / k:
            edges[(i, p)] = w
    edges[(p, q)] = L * k**2
    unit = L * dp**2 / k**2
    M = round(k**4 / dp**2)
    out = []
    for (a, b), w in edges.items():
        r = math.floor(w / unit + 0.5)
        out.append((a, b, max(1, min(r, M))))
    h = WeightedGraph(range(len(keep) + 2), out)
    return ReducedInstance(h, tuple(keep), p, q, M, L, dp)


def pvc_general(
    inst: PvcInstance, seed: int = 0, *, max_trials: int = DEFAULT_MAX_TRIALS
) -> PvcSolution:
    """(1+delta)-approximate partial VC with arbitrary non-negative weights."""
    g, k, delta = inst.graph, inst.k, inst.delta
    wdeg = {v: extended_degree(g, v) for v in g.vertices}
    zero = [v for v in g.vertices if wdeg[v] <= 0]
    if len(zero) >= k:
        s = frozenset(zero[:k])
        return PvcSolution(s, pvc_value(g, s))
    seeds = np.random.SeedSequence(seed).spawn(g.n)
    best: PvcSolution | None = None
    for v_star, ss in zip(g.vertices, seeds):
        red = build_reduced(g, k, delta, v_star)
        if red is None:
            continue
        sol = pvc_bounded(
            red.graph,
            k,
            red.delta_prime,
            int(ss.generate_state(1)[0]),
            M=red.M,
            exclude={red.p, red.q},
            max_trials=max_trials,
        )
        chosen = frozenset(red.survivors[i] for i in sol.chosen)
        cand = PvcSolution(chosen, pvc_value(g, chosen))
        if _better(best, cand):
            best = cand
    if best is None:
        # unreachable: the heaviest vertex keeps every vertex alive
        raise GraphError("no feasible reduced instance")
    return best
