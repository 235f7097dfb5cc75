"""Graph text format.

    p cut <n> <m>
    e <u> <v> <w>      (m lines, 0-based ids)
    v <u> <w>          (optional vertex weights)

Tokens are whitespace separated; ``#`` starts a comment.
"""
from __future__ import annotations

import math
from pathlib import Path

from kcut.graph import GraphError, WeightedGraph


class FormatError(GraphError):
    pass


def parse_graph(text: str) -> WeightedGraph:
    n = m = None
    edges, vw = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "p":
                if n is not None or len(tok) != 4 or tok[1] != "cut":
                    raise FormatError(f"line {lineno}: bad header")
                n, m = int(tok[2]), int(tok[3])
                if n < 1 or m < 0:
                    raise FormatError(f"line {lineno}: bad sizes")
            elif n is None:
                raise FormatError(f"line {lineno}: data before header")
            elif tok[0] == "e" and len(tok) == 4:
                u, v, w = int(tok[1]), int(tok[2]), float(tok[3])
                edges.append((u, v, w, lineno))
            elif tok[0] == "v" and len(tok) == 3:
                u, w = int(tok[1]), float(tok[2])
                vw[u] = (w, lineno)
            else:
                raise FormatError(f"line {lineno}: unrecognized record")
        except ValueError as e:
            raise FormatError(f"line {lineno}: {e}") from None
    if n is None:
        raise FormatError("missing header")
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    for u, v, w, ln in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {ln}: vertex id out of range")
        if not math.isfinite(w) or w < 0:
            raise FormatError(f"line {ln}: invalid weight")
    for u, (w, ln) in vw.items():
        if not 0 <= u < n:
            raise FormatError(f"line {ln}: vertex id out of range")
        if not math.isfinite(w) or w < 0:
            raise FormatError(f"line {ln}: invalid weight")
    return WeightedGraph(
        range(n), [(u, v, w) for u, v, w, _ in edges], {u: w for u, (w, _) in vw.items()}
    )


def format_graph(g: WeightedGraph) -> str:
    if g.vertices != tuple(range(g.n)):
        g, _ = g.relabeled()
    lines = [f"p cut {g.n} {g.m}"]
    lines += [f"e {u} {v} {w:.17g}" for u, v, w in g.edges]
    lines += [f"v {u} {w:.17g}" for u, w in sorted(g.vertex_weights.items())]
    return "\n".join(lines) + "\n"


def read_graph(path) -> WeightedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: WeightedGraph, path) -> None:
    Path(path).write_text(format_graph(g))
