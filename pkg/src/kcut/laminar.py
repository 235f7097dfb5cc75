"""Approximation for k-cut under the laminar near-mincut promise.

Works on a rooted mincut tree: a selection of incomparable non-root nodes
induces a partition whose weight is the sum of the selected edge weights
minus ``saved``. Anchors are found with partial vertex cover, many anchors
are handled by a knapsack greedy, few anchors by branch enumeration.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from kcut.cuts import complete, exact_kcut_oracle
from kcut.graph import TOL, GraphError, Partition, WeightedGraph
from kcut.pvc import PvcInstance, pvc_general
from kcut.tree import (
    CutTree,
    NodeSelection,
    build_mincut_tree,
    complement_nonempty,
    pairwise_saved,
    partition_from_selection,
    saved,
)

log = logging.getLogger(__name__)

# partial VC needs delta > 0; used when a caller passes delta = 0
PVC_MIN_DELTA = 1e-3


@dataclass(frozen=True)
class AnchorRecord:
    node: int
    s: int
    children_choice: tuple[int, ...]
    saved_value: float


@dataclass(frozen=True)
class Branch:
    nodes: tuple[int, ...]  # top-down
    top: int


@dataclass(frozen=True)
class KnapsackItem:
    size: int
    value: int
    origin: object = None


@dataclass
class LaminarContext:
    """Per-call state shared across roots: parameters and a PVC cache."""

    g: WeightedGraph
    k: int
    eps1: float
    delta: float
    seed: int = 0
    pvc_cache: dict = field(default_factory=dict)

    @property
    def eps3(self) -> float:
        return (1 - self.delta) / 4 - 2 * self.eps1


# -- partial VC over subtrees ----------------------------------------------


def subtree_partial_vc(
    g: WeightedGraph,
    t: CutTree,
    a_set: Sequence[int],
    s_max: int,
    delta: float,
    *,
    eps1: float | None = None,
    seed: int = 0,
    cache: dict | None = None,
) -> dict[int, NodeSelection | None]:
    """For each s <= s_max, s nodes of ``a_set`` with approximately maximum saved."""
    nodes = sorted(a_set)
    t.check_incomparable(nodes)
    eps1 = t.epsilon if eps1 is None else eps1
    out: dict[int, NodeSelection | None] = {}
    if not nodes:
        return {s: None for s in range(1, s_max + 1)}
    key = None
    if cache is not None:
        key = (frozenset(t.vertices_under(a) for a in nodes), s_max)
        # cached results are stored by vertex sets, which survive re-rooting
        if key in cache:
            by_set = {t.vertices_under(a): a for a in nodes}
            return {
                s: None if sel is None else NodeSelection(tuple(by_set[x] for x in sel[0]), sel[1])
                for s, sel in cache[key].items()
            }
    pw = pairwise_saved(g, t, nodes)
    cap = (1 + eps1) * t.mincut
    deg = [0.0] * len(nodes)
    for (i, j), w in pw.items():
        deg[i] += w
        deg[j] += w
    vw = {i: max(0.0, cap - deg[i]) for i in range(len(nodes))}
    aux = WeightedGraph(range(len(nodes)), [(i, j, w) for (i, j), w in pw.items()], vw)
    pdelta = delta if delta > 0 else PVC_MIN_DELTA
    for s in range(1, s_max + 1):
        if len(nodes) < s:
            out[s] = None
            continue
        sol = pvc_general(PvcInstance(aux, s, min(pdelta, 0.999)), seed + s)
        chosen = tuple(nodes[i] for i in sorted(sol.chosen))
        out[s] = NodeSelection(chosen, saved(g, t, chosen))
    if cache is not None:
        cache[key] = {
            s: None if sel is None else (tuple(t.vertices_under(a) for a in sel.nodes), sel.saved_value)
            for s, sel in out.items()
        }
    return out


def anchor_threshold(eps3: float, s: int, mincut: float, delta: float, eps1: float) -> float:
    return eps3 * (s - 1) * mincut - delta * (1 + eps1) * s * mincut


def find_near_anchors(
    g: WeightedGraph,
    t: CutTree,
    eps3: float,
    delta: float,
    k: int,
    *,
    eps1: float | None = None,
    seed: int = 0,
    cache: dict | None = None,
    per_node: dict | None = None,
) -> list[AnchorRecord]:
    """Nodes with s in [2, k-1] children whose saved clears the anchor threshold.

    Results are in leaf-to-root order. If ``per_node`` is given it receives
    the partial VC table of every node.
    """
    eps1 = t.epsilon if eps1 is None else eps1
    out = []
    for a in t.bottom_up():
        ch = t.children(a)
        if len(ch) < 2 or k < 3:
            continue
        table = subtree_partial_vc(
            g, t, ch, min(len(ch), k - 1), delta, eps1=eps1, seed=seed, cache=cache
        )
        if per_node is not None:
            per_node[a] = table
        best_s = None
        for s in range(2, min(len(ch), k - 1) + 1):
            sel = table[s]
            if sel is not None and sel.saved_value >= anchor_threshold(eps3, s, t.mincut, delta, eps1) - TOL:
                best_s = s
        if best_s is not None:
            sel = table[best_s]
            out.append(AnchorRecord(a, best_s, sel.nodes, sel.saved_value))
    return out


def minimal_anchors(t: CutTree, anchors: Sequence[AnchorRecord]) -> list[AnchorRecord]:
    """Keep anchors with no kept anchor below them, scanning leaf to root."""
    order = {a: i for i, a in enumerate(t.bottom_up())}
    kept: list[AnchorRecord] = []
    for rec in sorted(anchors, key=lambda r: order[r.node]):
        if not any(t.is_ancestor(rec.node, o.node) for o in kept):
            kept.append(rec)
    return kept


# -- many anchors ------------------------------------------------------------


def knapsack_greedy(items: Sequence[KnapsackItem], capacity: int) -> list[KnapsackItem]:
    """Take items by decreasing size whenever they still fit."""
    chosen, used = [], 0
    for it in sorted(items, key=lambda it: -it.size):
        if used + it.size <= capacity:
            chosen.append(it)
            used += it.size
    return chosen


def many_anchors_solve(
    g: WeightedGraph, t: CutTree, anchors: Sequence[AnchorRecord], k: int
) -> NodeSelection:
    if len(anchors) < k - 1:
        raise GraphError("need at least k-1 incomparable anchors")
    items = [KnapsackItem(a.s, a.s - 1, a) for a in anchors]
    nodes: list[int] = []
    for it in knapsack_greedy(items, k - 1):
        nodes.extend(it.origin.children_choice)
    return NodeSelection(tuple(nodes), saved(g, t, nodes))


# -- few anchors ---------------------------------------------------------------


def branches(t: CutTree, anchors: Sequence[int]) -> list[Branch]:
    """Split the union of root-to-anchor paths into chains.

    Each leaf or fork of that union starts a branch, which then absorbs its
    ancestors while they have a single child in the union.
    """
    anchors = list(anchors)
    if not anchors:
        return []
    union = set()
    for a in anchors:
        union.add(a)
        union.update(t.anc(a))
    kids = {a: [c for c in t.children(a) if c in union] for a in union}
    keys = sorted((a for a in union if len(kids[a]) != 1), key=lambda a: (t.depth(a), a))
    out = []
    for key in keys:
        chain = [key]
        a = key
        while a != t.root:
            p = t.parent[a]
            if len(kids[p]) != 1:
                break
            chain.append(p)
            a = p
        chain.reverse()
        out.append(Branch(tuple(chain), chain[0]))
    out.sort(key=lambda b: (t.depth(b.top), b.top))
    return out


def _path_children(t: CutTree, path: Sequence[int]) -> list[int]:
    ps = set(path)
    return sorted({c for p in path for c in t.children(p)} - ps)


def single_branch(
    ctx: LaminarContext, t: CutTree, b: Branch, s_max: int | None = None
) -> dict[int, NodeSelection | None]:
    """Best selection per size with all parents on one branch."""
    s_max = ctx.k - 1 if s_max is None else s_max
    best: dict[int, NodeSelection | None] = {s: None for s in range(1, s_max + 1)}
    for i in range(len(b.nodes)):
        cand = _path_children(t, b.nodes[: i + 1])
        if not cand:
            continue
        table = subtree_partial_vc(
            ctx.g, t, cand, s_max, ctx.delta, eps1=ctx.eps1, seed=ctx.seed, cache=ctx.pvc_cache
        )
        for s, sel in table.items():
            if sel is None:
                continue
            cur = best[s]
            if cur is None or sel.saved_value > cur.saved_value + TOL:
                best[s] = sel
    return best


def _incomparable_subsets(t: CutTree, bs: Sequence[Branch]):
    n = len(bs)
    for mask in range(1, 1 << n):
        sub = [bs[i] for i in range(n) if mask >> i & 1]
        if all(not t.comparable(x.top, y.top) for x, y in combinations(sub, 2)):
            yield sub


def few_anchors_solve(
    ctx: LaminarContext, t: CutTree, branch_set: Sequence[Branch]
) -> list[NodeSelection]:
    """Candidate selections from the internal and external cases."""
    k = ctx.k
    out: list[NodeSelection] = []
    tables = [single_branch(ctx, t, b) for b in branch_set]
    index = {b: i for i, b in enumerate(branch_set)}
    for sub in _incomparable_subsets(t, branch_set):
        # internal: knapsack over branches, total size <= k-1, each branch >= 1 node
        dp: dict[int, tuple[float, tuple]] = {0: (0.0, ())}
        for b in sub:
            tab = tables[index[b]]
            nxt: dict[int, tuple[float, tuple]] = {}
            for used, (val, picks) in dp.items():
                for s, sel in tab.items():
                    if sel is None or used + s > k - 1:
                        continue
                    cand = (val + sel.saved_value, picks + (sel,))
                    if used + s not in nxt or cand[0] > nxt[used + s][0] + TOL:
                        nxt[used + s] = cand
            dp = nxt
        if dp:
            used = max(dp, key=lambda u: (dp[u][0], u))
            nodes = tuple(x for sel in dp[used][1] for x in sel.nodes)
            out.append(NodeSelection(nodes, saved(ctx.g, t, nodes)))
        # external: partial VC on the children of the paths to the branch tops
        paths = set()
        for b in sub:
            paths.add(b.top)
            paths.update(t.anc(b.top))
        above = set()
        for b in sub:
            above.update(t.anc(b.top))
        for cand in (_path_children(t, sorted(paths)), _path_children(t, sorted(above))):
            if not cand:
                continue
            table = subtree_partial_vc(
                ctx.g, t, cand, k - 1, ctx.delta, eps1=ctx.eps1, seed=ctx.seed, cache=ctx.pvc_cache
            )
            out.extend(sel for sel in table.values() if sel is not None)
    return out


# -- assembly ------------------------------------------------------------------


@dataclass
class RootedResult:
    partition: Partition | None
    selection: NodeSelection | None
    candidates: int = 0


def _consider(ctx: LaminarContext, t: CutTree, sel: NodeSelection, res: RootedResult):
    if not sel.nodes or len(sel.nodes) > ctx.k - 1:
        return
    if not complement_nonempty(t, sel.nodes):
        return
    if res.selection is None or sel.saved_value > res.selection.saved_value + TOL:
        res.selection = sel
    p = complete(ctx.g, ctx.k, partition_from_selection(ctx.g, t, sel.nodes))
    res.candidates += 1
    if res.partition is None or p.cut_weight < res.partition.cut_weight:
        res.partition = p


def laminar_rooted(ctx: LaminarContext, t: CutTree) -> RootedResult:
    g, k = ctx.g, ctx.k
    res = RootedResult(None, None)
    per_node: dict = {}
    found = find_near_anchors(
        g, t, ctx.eps3, ctx.delta, k, eps1=ctx.eps1, seed=ctx.seed,
        cache=ctx.pvc_cache, per_node=per_node,
    )
    anchors = minimal_anchors(t, found)
    if len(anchors) >= k - 1:
        _consider(ctx, t, many_anchors_solve(g, t, anchors, k), res)
    else:
        for sel in few_anchors_solve(ctx, t, branches(t, [a.node for a in anchors])):
            _consider(ctx, t, sel, res)
    # children tables of every node are valid selections as well
    for a in sorted(per_node):
        for sel in per_node[a].values():
            if sel is not None:
                _consider(ctx, t, sel, res)
    nr = t.non_root()
    if nr:
        light = min(nr, key=lambda a: (t.edge_weight[a], a))
        _consider(ctx, t, NodeSelection((light,), 0.0), res)
    return res


@dataclass
class LaminarResult:
    partition: Partition
    selection: NodeSelection | None
    root: int | None
    tree: CutTree | None


def laminar(
    g: WeightedGraph,
    k: int,
    eps1: float,
    delta: float,
    *,
    seed: int = 0,
    tree: CutTree | None = None,
    small_k_exact: bool = True,
) -> LaminarResult:
    """k-partition of ``g`` assuming its (1+eps1)-mincuts are laminar.

    Raises ``NotLaminarError`` when they are not.
    """
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} out of range for n={g.n}")
    if k == 1:
        return LaminarResult(Partition((g.vertex_set,), 0.0), None, None, None)
    t = tree if tree is not None else build_mincut_tree(g, eps1)
    if k == g.n:
        return LaminarResult(Partition.of(g, [[v] for v in g.vertices]), None, None, t)
    if small_k_exact and k <= 4:
        return LaminarResult(exact_kcut_oracle(g, k, max_n=None), None, None, t)
    ctx = LaminarContext(g, k, eps1, delta, seed)
    best: Partition | None = None
    best_sel: NodeSelection | None = None
    best_root = None
    for r in t.nodes:
        tr = t.reroot(r)
        res = laminar_rooted(ctx, tr)
        if res.partition is not None and (best is None or res.partition.cut_weight < best.cut_weight):
            best, best_root = res.partition, r
        if res.selection is not None and (
            best_sel is None or res.selection.saved_value > best_sel.saved_value + TOL
        ):
            best_sel = res.selection
    if best is None:
        best = complete(g, k, [g.vertex_set])
    return LaminarResult(best, best_sel, best_root, t)


def laminar_bound(eps1: float, delta: float) -> float:
    """Approximation factor 2 - eps2 guaranteed under the promises."""
    return 2 - (1 / 6 - 2 * eps1 - 4 * delta)
