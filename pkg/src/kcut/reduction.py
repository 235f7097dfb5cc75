"""Reduction from general k-cut to the laminar case (Main / Guess / Record)."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import product

from kcut.cuts import CutUndefined, complete, global_mincut, min_four_cut
from kcut.graph import GraphError, Partition, WeightedGraph, boundary_weight, induced_subgraph
from kcut.laminar import laminar
from kcut.rng import derive_seed, stream
from kcut.tree import NotLaminarError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EpsilonConfig:
    eps1: float
    eps2: float
    eps3_final: float
    eps4: float
    eps5: float
    delta: float

    @property
    def eps3_anchor(self) -> float:
        """Anchor threshold used inside the laminar algorithm."""
        return (1 - self.delta) / 4 - 2 * self.eps1

    def violations(self) -> list[str]:
        e1, e2, e3, e4, e5, d = (
            self.eps1, self.eps2, self.eps3_final, self.eps4, self.eps5, self.delta
        )
        out = []
        if not 0 < e1 < 0.25:
            out.append("eps1 must lie in (0, 1/4)")
        if not 0 < d < 1 / 24:
            out.append("delta must lie in (0, 1/24)")
        if not e1 < 1 / 6 - 4 * d:
            out.append("eps1 must be below 1/6 - 4 delta")
        if min(e2, e3, e4, e5) <= 0:
            out.append("eps2..eps5 must be positive")
        if not (2 / 3) * e1 * e4 >= e3:
            out.append("(2/3) eps1 eps4 >= eps3 fails")
        if not (1 + e1 * e5 / 3) * (2 - e3) >= 2:
            out.append("(1 + eps1 eps5 / 3)(2 - eps3) >= 2 fails")
        if not e3 <= e2 - 2 * e5:
            out.append("eps3 <= eps2 - 2 eps5 fails")
        if self.eps3_anchor <= 0:
            out.append("anchor threshold (1 - delta)/4 - 2 eps1 must be positive")
        return out

    def validate(self) -> "EpsilonConfig":
        bad = self.violations()
        if bad:
            raise ValueError("invalid epsilon config: " + "; ".join(bad))
        return self

    @property
    def approximation(self) -> float:
        return 2 - self.eps3_final


def config_from(delta: float) -> EpsilonConfig:
    e1 = 1 / 18 - 4 * delta / 3
    e4 = e1 / 3
    return EpsilonConfig(e1, e1, e4 * e4, e4, e4, delta)


def default_config() -> EpsilonConfig:
    return config_from((1 / 24) / 100).validate()


@dataclass
class BestTracker:
    k: int
    best: Partition | None = None

    @property
    def best_weight(self) -> float:
        return math.inf if self.best is None else self.best.cut_weight


def record(tracker: BestTracker, p: Partition) -> bool:
    """Keep ``p`` if strictly lighter than the incumbent."""
    if len(p) != tracker.k:
        raise GraphError(f"expected a {tracker.k}-partition, got {len(p)} parts")
    if p.cut_weight < tracker.best_weight:
        tracker.best = p
        return True
    return False


@dataclass
class SolverStats:
    main_calls: int = 0
    laminar_calls: int = 0
    laminar_skipped: int = 0
    vectors_sampled: int = 0


def _vectors(k_ref: int, k: int, sizes: list[int], cap: int | None, rng):
    """r in [k]^k_ref with r_i <= |S_i|; sampled when the product exceeds ``cap``."""
    ranges = [range(1, min(k, s) + 1) for s in sizes]
    total = math.prod(len(r) for r in ranges)
    if cap is None or total <= cap:
        yield from product(*ranges)
        return
    seen = {tuple([1] * k_ref)}
    yield tuple([1] * k_ref)
    tries = 0
    while len(seen) < cap and tries < 20 * cap:
        tries += 1
        r = tuple(int(rng.integers(1, len(rr) + 1)) for rr in ranges)
        if r not in seen:
            seen.add(r)
            yield r


class KCutSolver:
    """Main / Guess with memoization over (vertex set, k)."""

    def __init__(
        self,
        g: WeightedGraph,
        cfg: EpsilonConfig | None = None,
        seed: int = 0,
        *,
        max_branch_vectors: int | None = -1,
        four_cut_mode: str = "auto",
        four_cut_exact_max_n: int = 24,
    ):
        self.g = g
        self.cfg = (cfg or default_config()).validate()
        self.seed = seed
        self.max_branch_vectors = max_branch_vectors
        self.four_cut_mode = four_cut_mode
        self.four_cut_exact_max_n = four_cut_exact_max_n
        self.stats = SolverStats()
        self.c_values: dict[tuple[frozenset[int], int], list[float]] = {}
        self._memo: dict[tuple[frozenset[int], int], Partition] = {}
        self._lam: dict[tuple[frozenset[int], int], Partition | None] = {}
        self._cut: dict[frozenset[int], tuple] = {}
        self._four: dict[frozenset[int], Partition | None] = {}
        self._guess: dict[tuple[frozenset[frozenset[int]], frozenset[int]], Partition] = {}
        self._warned = False

    # -- cached primitives --------------------------------------------

    def _sub(self, s: frozenset[int]) -> WeightedGraph:
        return induced_subgraph(self.g, s)

    def _mincut(self, s: frozenset[int]):
        if s not in self._cut:
            c = global_mincut(self._sub(s))
            self._cut[s] = (c.weight, c.side, s - c.side)
        return self._cut[s]

    def _min4(self, s: frozenset[int]) -> Partition | None:
        if s not in self._four:
            try:
                self._four[s] = min_four_cut(
                    self._sub(s),
                    mode=self.four_cut_mode,
                    seed=derive_seed(self.seed, "min4cut", s),
                    exact_max_n=self.four_cut_exact_max_n,
                )
            except CutUndefined:
                self._four[s] = None
        return self._four[s]

    def _laminar(self, s: frozenset[int], r: int) -> Partition | None:
        key = (s, r)
        if key not in self._lam:
            self.stats.laminar_calls += 1
            try:
                res = laminar(
                    self._sub(s), r, self.cfg.eps1, self.cfg.delta,
                    seed=derive_seed(self.seed, "laminar", s, r),
                )
                self._lam[key] = res.partition
            except NotLaminarError:
                self.stats.laminar_skipped += 1
                self._lam[key] = None
        return self._lam[key]

    def _lower(self, s: frozenset[int], k: int) -> float:
        """Any k-partition of G[s] weighs at least k * mincut / 2."""
        if k <= 1 or len(s) < 2:
            return 0.0
        lam = self._mincut(s)[0]
        return lam if k == 2 else k * lam / 2

    def _cap(self, k: int) -> int | None:
        if self.max_branch_vectors == -1:
            return None if k <= 5 else 64
        return self.max_branch_vectors

    # -- algorithm ----------------------------------------------------

    def main(self, s: frozenset[int], k: int) -> Partition:
        s = frozenset(s)
        if not 1 <= k <= len(s):
            raise GraphError(f"k={k} out of range for {len(s)} vertices")
        key = (s, k)
        if key in self._memo:
            return self._memo[key]
        self.stats.main_calls += 1
        sub = self._sub(s)
        if k == 1:
            res = Partition((s,), 0.0)
        elif k == len(s):
            res = Partition.of(sub, [[v] for v in sorted(s)])
        else:
            res = self._main(sub, s, k)
        self._memo[key] = res
        return res

    def _main(self, sub: WeightedGraph, s: frozenset[int], k: int) -> Partition:
        tracker = BestTracker(k)
        lb = self._lower(s, k)
        ref: list[frozenset[int]] = [s]
        cvals: list[float] = []
        rng = stream(self.seed, "vectors", s, k)
        while len(ref) < k:
            kr = len(ref)
            cap = self._cap(k)
            for r in _vectors(kr, k, [len(x) for x in ref], cap, rng):
                # strict Record: nothing can beat an incumbent at the lower bound
                if tracker.best_weight <= lb:
                    break
                parts: list[frozenset[int]] = []
                ok = True
                for si, ri in zip(ref, r):
                    if ri == 1:
                        parts.append(si)
                        continue
                    p = self._laminar(si, ri)
                    if p is None:
                        ok = False
                        break
                    parts.extend(p.parts)
                if not ok:
                    continue
                if len(parts) >= k:
                    parts = parts[: k - 1] + [frozenset().union(*parts[k - 1:])]
                    cand = Partition.of(sub, parts)
                else:
                    cand = complete(sub, k, parts)
                record(tracker, self.guess(sub, s, k, cand))
            # extend the reference partition
            cuts = [(self._mincut(x)[0], i) for i, x in enumerate(ref) if len(x) >= 2]
            m2, i2 = min(cuts)
            use_four = False
            if kr <= k - 3:
                fours = []
                for i, x in enumerate(ref):
                    p4 = self._min4(x) if len(x) >= 4 else None
                    if p4 is not None:
                        fours.append((p4.cut_weight, i))
                if fours:
                    m4, i4 = min(fours)
                    use_four = not m2 <= m4 / 3
            if use_four:
                p4 = self._min4(ref[i4])
                t1, *rest = p4.parts
                ref[i4] = t1
                ref.extend(rest)
                cvals.extend([m4 / 3] * 3)
            else:
                _, a, b = self._mincut(ref[i2])
                ref[i2] = b
                ref.append(a)
                cvals.append(m2)
        self.c_values[(s, k)] = cvals
        final = Partition.of(sub, ref)
        record(tracker, self.guess(sub, s, k, final))
        return tracker.best

    def guess(self, sub: WeightedGraph, s: frozenset[int], k: int, parts: Partition) -> Partition:
        key = (frozenset(parts.parts), s)
        if key in self._guess:
            return self._guess[key]
        tracker = BestTracker(k)
        record(tracker, parts)
        ps = list(parts.parts)
        for mask in range(1, (1 << k) - 1):
            left = frozenset().union(*(ps[j] for j in range(k) if mask >> j & 1))
            right = s - left
            across = boundary_weight(sub, left)
            if across >= tracker.best_weight:
                continue
            for kk in range(1, k):
                if kk > len(left) or k - kk > len(right):
                    continue
                bound = across + self._lower(left, kk) + self._lower(right, k - kk)
                if bound >= tracker.best_weight:
                    continue
                d1 = self.main(left, kk)
                d2 = self.main(right, k - kk)
                record(tracker, Partition.of(sub, list(d1.parts) + list(d2.parts)))
        self._guess[key] = tracker.best
        return tracker.best


def main_kcut(
    g: WeightedGraph,
    k: int,
    cfg: EpsilonConfig | None = None,
    seed: int = 0,
    **options,
) -> Partition:
    """(2 - eps3)-approximate minimum k-cut."""
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} out of range for n={g.n}")
    return KCutSolver(g, cfg, seed, **options).main(g.vertex_set, k)


def guess(
    g: WeightedGraph, k: int, parts: Partition, cfg: EpsilonConfig | None = None, seed: int = 0
) -> Partition:
    solver = KCutSolver(g, cfg, seed)
    return solver.guess(g, g.vertex_set, k, parts)
