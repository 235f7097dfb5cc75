"""Weighted undirected graphs, partitions and cuts."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

TOL = 1e-9


class GraphError(ValueError):
    """Malformed graph, partition or cut."""


class WeightedGraph:
    """Simple undirected graph with non-negative edge and vertex weights.

    Parallel edges are merged by summing, self-loops are dropped. Treated
    as immutable once built; derived structures are cached lazily.
    """

    __slots__ = ("vertices", "edges", "vertex_weights", "_index", "_dense", "_adj")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int, float]] = (),
        vertex_weights: Mapping[int, float] | None = None,
    ):
        verts = sorted(set(int(v) for v in vertices))
        if not verts:
            raise GraphError("graph must have at least one vertex")
        vset = set(verts)
        merged: dict[tuple[int, int], float] = {}
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u}, {v}) references an unknown vertex")
            if not math.isfinite(w) or w < 0:
                raise GraphError(f"edge ({u}, {v}) has invalid weight {w}")
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0.0) + w
        vw: dict[int, float] = {}
        for v, w in (vertex_weights or {}).items():
            v, w = int(v), float(w)
            if v not in vset:
                raise GraphError(f"vertex weight for unknown vertex {v}")
            if not math.isfinite(w) or w < 0:
                raise GraphError(f"vertex {v} has invalid weight {w}")
            if w:
                vw[v] = w
        self.vertices: tuple[int, ...] = tuple(verts)
        self.edges: tuple[tuple[int, int, float], ...] = tuple(
            (u, v, merged[(u, v)]) for u, v in sorted(merged)
        )
        self.vertex_weights: dict[int, float] = vw
        self._index = None
        self._dense = None
        self._adj = None

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def vertex_weight(self, v: int) -> float:
        return self.vertex_weights.get(v, 0.0)

    def total_weight(self) -> float:
        return math.fsum(w for _, _, w in self.edges)

    @property
    def index(self) -> dict[int, int]:
        """Vertex id -> dense position in ``vertices``."""
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self.vertices)}
        return self._index

    @property
    def adjacency(self) -> dict[int, dict[int, float]]:
        if self._adj is None:
            adj: dict[int, dict[int, float]] = {v: {} for v in self.vertices}
            for u, v, w in self.edges:
                adj[u][v] = w
                adj[v][u] = w
            self._adj = adj
        return self._adj

    def dense(self) -> np.ndarray:
        """Symmetric weight matrix in ``vertices`` order (read-only)."""
        if self._dense is None:
            idx = self.index
            a = np.zeros((self.n, self.n))
            for u, v, w in self.edges:
                a[idx[u], idx[v]] = w
                a[idx[v], idx[u]] = w
            a.setflags(write=False)
            self._dense = a
        return self._dense

    def weighted_degree(self, v: int) -> float:
        return math.fsum(self.adjacency[v].values())

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.vertex_weights == other.vertex_weights
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"

    def relabeled(self) -> tuple["WeightedGraph", dict[int, int]]:
        """Copy with vertices renamed to ``0..n-1``; returns the new->old map."""
        idx = self.index
        g = WeightedGraph(
            range(self.n),
            [(idx[u], idx[v], w) for u, v, w in self.edges],
            {idx[v]: w for v, w in self.vertex_weights.items()},
        )
        return g, {i: v for v, i in idx.items()}


@dataclass(frozen=True)
class Cut:
    side: frozenset[int]
    weight: float

    @classmethod
    def of(cls, g: WeightedGraph, side: Iterable[int]) -> "Cut":
        s = frozenset(side)
        return cls(s, boundary_weight(g, s))

    def canonical(self, g: WeightedGraph) -> "Cut":
        """Orient to the side avoiding the smallest vertex id of ``g``."""
        if g.vertices[0] in self.side:
            return Cut(g.vertex_set - self.side, self.weight)
        return self


@dataclass(frozen=True)
class Partition:
    parts: tuple[frozenset[int], ...]
    cut_weight: float

    @classmethod
    def of(cls, g: WeightedGraph, parts: Iterable[Iterable[int]]) -> "Partition":
        ps = tuple(frozenset(p) for p in parts)
        return cls(ps, cut_weight(g, ps))

    def __len__(self) -> int:
        return len(self.parts)

    def canonical(self) -> "Partition":
        """Parts sorted by their smallest member."""
        return Partition(tuple(sorted(self.parts, key=min)), self.cut_weight)

    def labels(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.canonical().parts]


def _check_partition(g: WeightedGraph, parts: Sequence[frozenset[int]]) -> dict[int, int]:
    label: dict[int, int] = {}
    for i, p in enumerate(parts):
        if not p:
            raise GraphError("partition has an empty part")
        for v in p:
            if v in label:
                raise GraphError(f"vertex {v} appears in two parts")
            label[v] = i
    if len(label) != g.n or any(v not in label for v in g.vertices):
        raise GraphError("parts do not cover exactly the vertex set")
    return label


def cut_weight(g: WeightedGraph, parts) -> float:
    """Total weight of edges whose endpoints lie in different parts."""
    if isinstance(parts, Partition):
        parts = parts.parts
    parts = [p if isinstance(p, frozenset) else frozenset(p) for p in parts]
    label = _check_partition(g, parts)
    return math.fsum(w for u, v, w in g.edges if label[u] != label[v])


def boundary_weight(g: WeightedGraph, s: Iterable[int]) -> float:
    """Weight of the edges with exactly one endpoint in ``s``."""
    s = frozenset(s)
    if not s or not s < g.vertex_set:
        raise GraphError("boundary needs a non-empty proper vertex subset")
    return math.fsum(w for u, v, w in g.edges if (u in s) != (v in s))


def induced_subgraph(g: WeightedGraph, s: Iterable[int]) -> WeightedGraph:
    s = frozenset(s)
    if not s:
        raise GraphError("induced subgraph of the empty set")
    if not s <= g.vertex_set:
        raise GraphError("subset contains unknown vertices")
    if len(s) == g.n:
        return g
    return WeightedGraph(
        s,
        [(u, v, w) for u, v, w in g.edges if u in s and v in s],
        {v: w for v, w in g.vertex_weights.items() if v in s},
    )


def contract(
    g: WeightedGraph, groups: Sequence[Iterable[int]]
) -> tuple[WeightedGraph, dict[int, frozenset[int]]]:
    """Contract each group to one vertex.

    New ids are ``0..n'-1``: groups first in the given order, then the
    untouched vertices in ascending order. Vertex weights are summed per
    group. Returns the contracted graph and new id -> original vertices.
    """
    groups = [frozenset(x) for x in groups]
    owner: dict[int, int] = {}
    for i, grp in enumerate(groups):
        if not grp:
            raise GraphError("empty contraction group")
        for v in grp:
            if v not in g.index:
                raise GraphError(f"unknown vertex {v}")
            if v in owner:
                raise GraphError(f"vertex {v} is in two contraction groups")
            owner[v] = i
    expand: dict[int, frozenset[int]] = dict(enumerate(groups))
    nid = len(groups)
    for v in g.vertices:
        if v not in owner:
            owner[v] = nid
            expand[nid] = frozenset((v,))
            nid += 1
    vw: dict[int, float] = {}
    for v, w in g.vertex_weights.items():
        vw[owner[v]] = vw.get(owner[v], 0.0) + w
    h = WeightedGraph(
        range(nid), [(owner[u], owner[v], w) for u, v, w in g.edges], vw
    )
    return h, expand


def crosses(a: Cut | Iterable[int], b: Cut | Iterable[int], vertices: Iterable[int]) -> bool:
    """True iff A-B, B-A, A&B and V-(A|B) are all non-empty."""
    sa = a.side if isinstance(a, Cut) else frozenset(a)
    sb = b.side if isinstance(b, Cut) else frozenset(b)
    vs = frozenset(vertices)
    return bool(sa - sb) and bool(sb - sa) and bool(sa & sb) and bool(vs - (sa | sb))
