"""Independent brute-force oracles for the test suite.

Nothing here calls into the package's algorithms; inputs are read from
``WeightedGraph`` attributes only (vertices, edges, vertex_weights) or,
for trees, from the raw parent / phi maps.
"""
from __future__ import annotations

from itertools import combinations


def edge_list(g):
    return [(u, v, w) for u, v, w in g.edges]


def crossing(edges, label) -> float:
    return sum(w for u, v, w in edges if label[u] != label[v])


def set_partitions(items, k):
    """All partitions of ``items`` into exactly k non-empty blocks (restricted growth strings)."""
    items = list(items)
    n = len(items)
    if k < 1 or k > n:
        return
    a = [0] * n

    def rec(i, used):
        if n - i < k - used:
            return
        if i == n:
            if used == k:
                yield dict(zip(items, a))
            return
        for b in range(min(used + 1, k)):
            a[i] = b
            yield from rec(i + 1, max(used, b + 1))

    yield from rec(0, 0)


def brute_kcut(g, k) -> float:
    edges = edge_list(g)
    return min(crossing(edges, lab) for lab in set_partitions(g.vertices, k))


def brute_kcut_partitions(g, k):
    """(weight, list of labelings attaining it)."""
    edges = edge_list(g)
    best, arg = float("inf"), []
    for lab in set_partitions(g.vertices, k):
        w = crossing(edges, lab)
        if w < best - 1e-12:
            best, arg = w, [dict(lab)]
        elif abs(w - best) <= 1e-12:
            arg.append(dict(lab))
    return best, arg


def all_cuts(g):
    """Every bipartition once, as (side avoiding the smallest vertex, weight)."""
    vs = sorted(g.vertices)
    v0, rest = vs[0], vs[1:]
    edges = edge_list(g)
    for r in range(1, len(rest) + 1):
        for side in combinations(rest, r):
            s = set(side)
            yield frozenset(s), sum(w for u, v, w in edges if (u in s) != (v in s))


def brute_mincut(g) -> float:
    return min(w for _, w in all_cuts(g))


def brute_near_cuts(g, eps) -> dict:
    lam = brute_mincut(g)
    return {s: w for s, w in all_cuts(g) if w <= (1 + eps) * lam + 1e-9}


def pvc_objective(g, chosen) -> float:
    chosen = set(chosen)
    return sum(w for u, v, w in g.edges if u in chosen or v in chosen) + sum(
        g.vertex_weights.get(v, 0.0) for v in chosen
    )


def brute_pvc(g, k) -> float:
    return min(pvc_objective(g, c) for c in combinations(g.vertices, k))


def laminar_family(sets, universe) -> bool:
    universe = frozenset(universe)
    for a, b in combinations(sets, 2):
        if a & b and a - b and b - a and universe - (a | b):
            return False
    return True


# -- trees ------------------------------------------------------------------


def _tree_adj(parent, root):
    adj = {a: set() for a in parent}
    for a, p in parent.items():
        if a != root:
            adj[a].add(p)
            adj[p].add(a)
    return adj


def _rooted(parent, root, new_root):
    """Parent map after rerooting at ``new_root``."""
    adj = _tree_adj(parent, root)
    par = {new_root: new_root}
    stack = [new_root]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in par:
                par[b] = a
                stack.append(b)
    return par


def _under(par, r, phi):
    """Vertices in the subtree of each node (rooted map ``par``)."""
    hosted = {a: set() for a in par}
    for v, a in phi.items():
        hosted[a].add(v)
    kids = {a: [] for a in par}
    for a, p in par.items():
        if a != r:
            kids[p].append(a)
    out = {}

    def go(a):
        s = set(hosted[a])
        for b in kids[a]:
            s |= go(b)
        out[a] = frozenset(s)
        return out[a]

    go(r)
    return out


def _ancestors(par, r, a):
    out = set()
    while a != r:
        a = par[a]
        out.add(a)
    return out


def ell_star(g, parent, root, phi, k) -> float:
    """Max over roots and incomparable (k-1)-node selections of the saved value.

    The selection must leave a non-empty part for the root.
    """
    edges = edge_list(g)
    allv = frozenset(g.vertices)
    best = 0.0
    for r in parent:
        par = _rooted(parent, root, r)
        under = _under(par, r, phi)
        nodes = [a for a in par if a != r]
        anc = {a: _ancestors(par, r, a) for a in nodes}
        for sel in combinations(nodes, k - 1):
            if any(b in anc[a] or a in anc[b] for a, b in combinations(sel, 2)):
                continue
            covered = frozenset().union(*(under[a] for a in sel))
            if not allv - covered:
                continue
            lab = {}
            for i, a in enumerate(sel):
                for v in under[a]:
                    lab[v] = i
            s = sum(w for u, v, w in edges if u in lab and v in lab and lab[u] != lab[v])
            best = max(best, s)
    return best


def tree_cut_sides(parent, root, phi):
    """Vertex sides induced by tree edges (subtree side), canonicalized to avoid the min vertex."""
    under = _under(parent, root, phi)
    allv = frozenset(phi)
    v0 = min(allv)
    out = set()
    for a in parent:
        if a == root:
            continue
        s = under[a]
        out.add(allv - s if v0 in s else s)
    return out
