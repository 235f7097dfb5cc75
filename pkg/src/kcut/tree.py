"""Mincut trees of laminar near-mincut families and the ``saved`` functional."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from kcut.cuts import enumerate_near_mincuts, global_mincut
from kcut.graph import GraphError, Partition, WeightedGraph, crosses


class NotLaminarError(GraphError):
    """The near-mincut family contains two crossing cuts."""


@dataclass(frozen=True)
class NodeSelection:
    nodes: tuple[int, ...]
    saved_value: float

    def __len__(self):
        return len(self.nodes)


@dataclass
class CutTree:
    """A rooted tree whose edges represent the near-mincuts of a graph.

    ``parent[root] == root``. ``edge_weight[a]`` is the weight of the edge
    between ``a`` and its parent. ``phi`` maps graph vertices to nodes.
    """

    nodes: tuple[int, ...]
    parent: dict[int, int]
    edge_weight: dict[int, float]
    phi: dict[int, int]
    root: int
    mincut: float
    epsilon: float
    _children: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)
    _depth: dict[int, int] = field(default_factory=dict, repr=False)
    _tin: dict[int, int] = field(default_factory=dict, repr=False)
    _tout: dict[int, int] = field(default_factory=dict, repr=False)
    _under: dict[int, frozenset[int]] = field(default_factory=dict, repr=False)
    _hosted: dict[int, frozenset[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        kids: dict[int, list[int]] = {a: [] for a in self.nodes}
        for a in self.nodes:
            if a != self.root:
                kids[self.parent[a]].append(a)
        self._children = {a: tuple(sorted(c)) for a, c in kids.items()}
        hosted: dict[int, list[int]] = {a: [] for a in self.nodes}
        for v, a in self.phi.items():
            hosted[a].append(v)
        self._hosted = {a: frozenset(h) for a, h in hosted.items()}
        # iterative DFS for Euler times and depths
        clock = 0
        self._depth[self.root] = 0
        stack = [(self.root, False)]
        while stack:
            a, done = stack.pop()
            if done:
                self._tout[a] = clock
                under = set(self._hosted[a])
                for c in self._children[a]:
                    under |= self._under[c]
                self._under[a] = frozenset(under)
                continue
            self._tin[a] = clock
            clock += 1
            stack.append((a, True))
            for c in reversed(self._children[a]):
                self._depth[c] = self._depth[a] + 1
                stack.append((c, False))
        if len(self._tin) != len(self.nodes):
            raise GraphError("parent links do not form a tree")

    # -- structure -----------------------------------------------------

    def children(self, a: int) -> tuple[int, ...]:
        return self._children[a]

    def depth(self, a: int) -> int:
        return self._depth[a]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff ``a`` is a strict ancestor of ``b``."""
        return a != b and self._tin[a] <= self._tin[b] and self._tout[b] <= self._tout[a]

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.is_ancestor(a, b) or self.is_ancestor(b, a)

    def anc(self, a: int) -> list[int]:
        out = []
        while a != self.root:
            a = self.parent[a]
            out.append(a)
        return out

    def desc(self, a: int) -> list[int]:
        out, todo = [], list(self._children[a])
        while todo:
            b = todo.pop()
            out.append(b)
            todo.extend(self._children[b])
        return sorted(out)

    def subtree(self, a: int) -> list[int]:
        return sorted([a] + self.desc(a))

    def hosted(self, a: int) -> frozenset[int]:
        return self._hosted[a]

    def vertices_under(self, a: int) -> frozenset[int]:
        """phi^-1(subtree(a))."""
        return self._under[a]

    def non_root(self) -> list[int]:
        return [a for a in self.nodes if a != self.root]

    def bottom_up(self) -> list[int]:
        """Leaf-to-root order; ties by node id."""
        return sorted(self.nodes, key=lambda a: (-self._depth[a], a))

    def check_incomparable(self, nodes: Sequence[int]) -> None:
        nodes = list(nodes)
        if len(set(nodes)) != len(nodes):
            raise GraphError("repeated node in selection")
        for a in nodes:
            if a == self.root:
                raise GraphError("selection contains the root")
            if a not in self._tin:
                raise GraphError(f"unknown tree node {a}")
        for i in range(len(nodes)):
            for j in range(i + 1, len(nodes)):
                if self.comparable(nodes[i], nodes[j]):
                    raise GraphError(f"nodes {nodes[i]} and {nodes[j]} are comparable")

    # -- re-rooting ----------------------------------------------------

    def _undirected(self) -> dict[int, dict[int, float]]:
        adj: dict[int, dict[int, float]] = {a: {} for a in self.nodes}
        for a in self.nodes:
            if a != self.root:
                p = self.parent[a]
                adj[a][p] = self.edge_weight[a]
                adj[p][a] = self.edge_weight[a]
        return adj

    def reroot(self, r: int) -> "CutTree":
        if r == self.root:
            return self
        if r not in self._tin:
            raise GraphError(f"unknown tree node {r}")
        adj = self._undirected()
        parent = {r: r}
        weight: dict[int, float] = {}
        todo = deque([r])
        while todo:
            a = todo.popleft()
            for b, w in sorted(adj[a].items()):
                if b not in parent:
                    parent[b] = a
                    weight[b] = w
                    todo.append(b)
        return CutTree(self.nodes, parent, weight, dict(self.phi), r, self.mincut, self.epsilon)

    def cuts(self) -> list[frozenset[int]]:
        """Vertex sides of all tree edges (the subtree side, current rooting)."""
        return [self._under[a] for a in self.non_root()]

    def dump(self) -> str:
        """Text form: ``t <id> <parent> <w>`` per node (root parent -1), then ``m <vertex> <node>``."""
        lines = []
        for a in self.nodes:
            w = self.edge_weight.get(a, 0.0)
            par = -1 if a == self.root else self.parent[a]
            lines.append(f"t {a} {par} {w:.17g}")
        for v in sorted(self.phi):
            lines.append(f"m {v} {self.phi[v]}")
        return "\n".join(lines) + "\n"


def build_mincut_tree(g: WeightedGraph, epsilon1: float, *, randomized: bool = False, seed: int = 0) -> CutTree:
    """Tree representation of the (1+epsilon1)-mincuts of ``g``.

    Raises ``NotLaminarError`` when two near-mincuts cross.
    """
    if g.n < 2:
        raise GraphError("mincut tree needs at least two vertices")
    lam = global_mincut(g).weight
    fam = enumerate_near_mincuts(g, epsilon1, randomized=randomized, seed=seed, mincut=lam)
    cuts = list(fam.cuts)
    vs = g.vertex_set
    for i in range(len(cuts)):
        for j in range(i + 1, len(cuts)):
            if crosses(cuts[i], cuts[j], vs):
                raise NotLaminarError(
                    f"not laminar: cuts {sorted(cuts[i].side)} and {sorted(cuts[j].side)} cross"
                )
    # every side avoids the smallest vertex, so the sets form a forest under inclusion
    order = sorted(cuts, key=lambda c: (-len(c.side), sorted(c.side)))
    parent = {0: 0}
    weight: dict[int, float] = {}
    sets: list[frozenset[int]] = []
    for i, c in enumerate(order):
        node = i + 1
        best, best_size = 0, math.inf
        for j, s in enumerate(sets):
            if c.side < s and len(s) < best_size:
                best, best_size = j + 1, len(s)
        parent[node] = best
        weight[node] = c.weight
        sets.append(c.side)
    phi = {}
    for v in g.vertices:
        host, size = 0, math.inf
        for j, s in enumerate(sets):
            if v in s and len(s) < size:
                host, size = j + 1, len(s)
        phi[v] = host
    nodes = tuple(range(len(sets) + 1))
    return CutTree(nodes, parent, weight, phi, 0, lam, epsilon1)


def _labels(t: CutTree, nodes: Iterable[int]) -> dict[int, int]:
    lab = {}
    for i, a in enumerate(nodes):
        for v in t.vertices_under(a):
            lab[v] = i
    return lab


def saved(g: WeightedGraph, t: CutTree, nodes: Sequence[int]) -> float:
    """Weight of edges running between the subtrees of two selected nodes."""
    t.check_incomparable(nodes)
    lab = _labels(t, nodes)
    return math.fsum(
        w for u, v, w in g.edges if u in lab and v in lab and lab[u] != lab[v]
    )


def pairwise_saved(g: WeightedGraph, t: CutTree, nodes: Sequence[int]) -> dict[tuple[int, int], float]:
    """saved(a, b) for every pair of the given incomparable nodes, keyed by positions."""
    t.check_incomparable(nodes)
    lab = _labels(t, nodes)
    acc: dict[tuple[int, int], list[float]] = {}
    for u, v, w in g.edges:
        a, b = lab.get(u), lab.get(v)
        if a is None or b is None or a == b:
            continue
        key = (a, b) if a < b else (b, a)
        acc.setdefault(key, []).append(w)
    return {key: math.fsum(ws) for key, ws in acc.items()}


def partition_from_selection(g: WeightedGraph, t: CutTree, nodes: Sequence[int]) -> Partition:
    t.check_incomparable(nodes)
    parts = [t.vertices_under(a) for a in nodes]
    rest = g.vertex_set.difference(*parts)
    if not rest:
        raise GraphError("selection leaves no vertices for the complement part")
    return Partition.of(g, parts + [rest])


def selection_of(g: WeightedGraph, t: CutTree, nodes: Sequence[int]) -> NodeSelection:
    return NodeSelection(tuple(nodes), saved(g, t, nodes))


def complement_nonempty(t: CutTree, nodes: Sequence[int]) -> bool:
    covered = set()
    for a in nodes:
        covered |= t.vertices_under(a)
    return len(covered) < len(t.phi)
