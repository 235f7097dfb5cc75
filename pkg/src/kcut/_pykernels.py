"""Pure-Python kernels. Same signatures and results as ``_ckernels``.

All kernels take a dense symmetric weight matrix over vertex indices
``0..n-1`` (zero diagonal). They are the fallback when the compiled
extension is unavailable and the reference the compiled code is tested
against.
"""
from __future__ import annotations

import math

import numpy as np


def near_cuts(W, bound):
    """Masks of all cuts with weight <= bound.

    Sides are encoded over vertices ``1..n-1`` (bit ``i-1`` is vertex
    ``i``), i.e. the canonical side never contains vertex 0. Weights are
    maintained incrementally along a Gray code, so callers must
    recompute exact weights for the masks they keep.
    """
    W = np.asarray(W, dtype=float)
    n = W.shape[0]
    rows = W.tolist()
    deg = [sum(r) for r in rows]
    acc = [0.0] * n
    inside = [False] * n
    w = 0.0
    masks = []
    weights = []
    total = 1 << (n - 1)
    for i in range(1, total):
        bit = (i & -i).bit_length() - 1
        v = bit + 1
        row = rows[v]
        if inside[v]:
            inside[v] = False
            for u in range(n):
                acc[u] -= row[u]
            w -= deg[v] - 2.0 * acc[v]
        else:
            w += deg[v] - 2.0 * acc[v]
            inside[v] = True
            for u in range(n):
                acc[u] += row[u]
        if w <= bound:
            masks.append(i ^ (i >> 1))
            weights.append(w)
    return np.array(masks, dtype=np.int64), np.array(weights, dtype=float)


def stoer_wagner(W):
    """Global minimum cut by maximum-adjacency orderings.

    Returns ``(weight, side)`` where ``side`` is a boolean array marking
    the vertices of the last-added group of the best phase.
    """
    W = np.array(W, dtype=float)
    n = W.shape[0]
    if n < 2:
        raise ValueError("need at least two vertices")
    a = W.tolist()
    active = list(range(n))
    members = [[v] for v in range(n)]
    best = math.inf
    best_side = None
    while len(active) > 1:
        used = {active[0]}
        key = {v: a[active[0]][v] for v in active[1:]}
        prev = active[0]
        last = active[0]
        while key:
            # max-adjacency step; ties go to the lowest index
            last = max(key, key=lambda v: (key[v], -v))
            kw = key.pop(last)
            used.add(last)
            if not key:
                if kw < best:
                    best = kw
                    best_side = list(members[last])
                break
            row = a[last]
            for v in key:
                key[v] += row[v]
            prev = last
        s, t = prev, last
        members[s].extend(members[t])
        for v in active:
            a[s][v] += a[t][v]
            a[v][s] = a[s][v]
        a[s][s] = 0.0
        active.remove(t)
    side = np.zeros(n, dtype=bool)
    side[best_side] = True
    return best, side


def min_kpartition(W, k, upper):
    """Exact minimum k-partition by branch and bound.

    Enumerates restricted-growth labelings with exactly ``k`` blocks in
    the given vertex order. Only solutions strictly below ``upper`` are
    reported; returns ``(weight, labels)`` or ``(inf, None)``.
    """
    W = np.asarray(W, dtype=float)
    n = W.shape[0]
    rows = W.tolist()
    labels = [-1] * n
    best = [upper]
    best_labels = [None]
    # blockw[b][u]: weight from u to assigned vertices of block b
    blockw = [[0.0] * n for _ in range(k)]
    assigned = [0.0] * n

    def lower_bound(i, used):
        lb = 0.0
        for u in range(i, n):
            au = assigned[u]
            m = au
            for b in range(used):
                c = au - blockw[b][u]
                if c < m:
                    m = c
            lb += m
        return lb

    def rec(i, used, cost):
        if i == n:
            if used == k and cost < best[0]:
                best[0] = cost
                best_labels[0] = list(labels)
            return
        if cost + lower_bound(i, used) >= best[0]:
            return
        au = assigned[i]
        row = rows[i]
        top = used + 1 if used < k else used
        for b in range(top):
            new_used = used + 1 if b == used else used
            if k - new_used > n - i - 1:
                continue
            c = cost + au - blockw[b][i]
            if c >= best[0]:
                continue
            labels[i] = b
            bw = blockw[b]
            for u in range(n):
                bw[u] += row[u]
                assigned[u] += row[u]
            rec(i + 1, new_used, c)
            for u in range(n):
                bw[u] -= row[u]
                assigned[u] -= row[u]
            labels[i] = -1

    rec(0, 0, 0.0)
    if best_labels[0] is None:
        return math.inf, None
    return best[0], np.array(best_labels[0], dtype=np.int64)


def _coloring_value(n, red, eu, ev, ew, k, tau):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in zip(eu, ev):
        if red >> u & 1 and red >> v & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    size = {}
    cost = {}
    for v in range(n):
        if red >> v & 1:
            r = find(v)
            size[r] = size.get(r, 0) + 1
            cost.setdefault(r, 0)
    for u, v, w in zip(eu, ev, ew):
        if red >> u & 1:
            cost[find(u)] += w
        elif red >> v & 1:
            cost[find(v)] += w
    INF = math.inf
    dp = [0] + [INF] * k
    for r, s in size.items():
        c = cost[r]
        if s > k or c > tau:
            continue
        for j in range(k, s - 1, -1):
            if dp[j - s] + c < dp[j]:
                dp[j] = dp[j - s] + c
    return dp[k]


def pvc_best_coloring(n, n_free, eu, ev, ew, k, tau, masks=None):
    """Best red/blue coloring for the bounded-weight partial-VC DP.

    Vertices ``n_free..n-1`` are always blue. ``masks`` lists the red sets
    to try; ``None`` means every subset of the free vertices. Returns
    ``(cost, mask)`` with ``cost = inf`` when no coloring admits a
    selection of exactly ``k`` red-component vertices.
    """
    eu = [int(x) for x in eu]
    ev = [int(x) for x in ev]
    ew = [int(x) for x in ew]
    if masks is None:
        masks = range(1 << n_free)
    best = math.inf
    best_mask = -1
    for red in masks:
        red = int(red)
        if bin(red).count("1") < k:
            continue
        val = _coloring_value(n, red, eu, ev, ew, k, tau)
        if val < best:
            best = val
            best_mask = red
    return best, best_mask
