"""Benchmark suites producing RunReports."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import asdict

from kcut.cuts import exact_kcut_oracle, greedy_sv
from kcut.generators import (
    gen_planted_laminar,
    gen_random_gnp,
    gen_star_pvc,
    gen_two_clique,
)
from kcut.graph import GraphError, WeightedGraph
from kcut.io import read_graph
from kcut.laminar import laminar
from kcut.pvc import PvcInstance, pvc_bruteforce, pvc_general
from kcut.reduction import EpsilonConfig, default_config, main_kcut
from kcut.report import InstanceSpec, RunReport, make_report
from kcut.rng import stream

log = logging.getLogger(__name__)

SUITES = ("oracle", "paper", "pvc")

_REQUIRED = {
    "two_clique": ("k",),
    "planted_laminar": ("k", "n_per_part", "eps1", "seed"),
    "random_gnp": ("n", "p", "seed"),
    "star_pvc": ("n", "seed"),
    "file": ("path",),
}


def build_instance(spec: InstanceSpec):
    """Materialize an InstanceSpec; returns (graph, planted partition or None)."""
    if spec.kind not in _REQUIRED:
        raise GraphError(f"unknown instance kind {spec.kind!r}")
    missing = [p for p in _REQUIRED[spec.kind] if p not in spec.params]
    if missing:
        raise GraphError(f"{spec.kind} needs parameters: {', '.join(missing)}")
    q = spec.params
    if spec.kind == "two_clique":
        return gen_two_clique(int(q["k"])), None
    if spec.kind == "planted_laminar":
        return gen_planted_laminar(int(q["k"]), int(q["n_per_part"]), float(q["eps1"]), int(q["seed"]))
    if spec.kind == "random_gnp":
        g = gen_random_gnp(
            int(q["n"]), float(q["p"]), int(q["seed"]),
            wmin=int(q.get("wmin", 1)), wmax=int(q.get("wmax", 10)),
        )
        return g, None
    if spec.kind == "star_pvc":
        return gen_star_pvc(int(q["n"]), int(q["seed"])), None
    return read_graph(q["path"]), None


def config_dict(cfg: EpsilonConfig) -> dict:
    return asdict(cfg)


# -- instance lists -------------------------------------------------------


def random_kcut_specs(count: int = 100, seed: int = 0) -> list[tuple[InstanceSpec, int]]:
    """Random graphs with n <= 10 and k in {2, 3, 4}, cycling k."""
    rng = stream(seed, "bench-random")
    out = []
    for i in range(count):
        k = 2 + i % 3
        n = int(rng.integers(max(k, 4), 11))
        p = float(rng.choice([0.4, 0.6, 0.8]))
        params = {"n": n, "p": p, "seed": int(rng.integers(1 << 31)), "wmin": 1, "wmax": 10}
        out.append((InstanceSpec("random_gnp", params), k))
    return out


def paper_specs() -> list[tuple[InstanceSpec, int]]:
    return [
        (InstanceSpec("two_clique", {"k": 3}), 3),
        (InstanceSpec("two_clique", {"k": 4}), 4),
        (InstanceSpec("planted_laminar", {"k": 6, "n_per_part": 4, "eps1": 0.05, "seed": 7}), 6),
    ]


def planted_specs(count: int = 20, seed: int = 0, eps1: float = 0.02) -> list[tuple[InstanceSpec, int]]:
    rng = stream(seed, "bench-planted")
    out = []
    for i in range(count):
        k = 5 + i % 2
        params = {"k": k, "n_per_part": int(rng.integers(2, 4)), "eps1": eps1, "seed": int(rng.integers(1 << 31))}
        out.append((InstanceSpec("planted_laminar", params), k))
    return out


def pvc_specs(count: int = 200, seed: int = 0) -> list[tuple[InstanceSpec, int]]:
    rng = stream(seed, "bench-pvc")
    out = []
    for _ in range(count):
        n = int(rng.integers(4, 15))
        k = int(rng.integers(1, 4))
        out.append((InstanceSpec("star_pvc", {"n": n, "seed": int(rng.integers(1 << 31))}), k))
    return out


# -- report builders ------------------------------------------------------


def main_reports(specs, seed: int = 0, cfg: EpsilonConfig | None = None) -> list[RunReport]:
    cfg = cfg or default_config()
    reports = []
    for spec, k in specs:
        g, _ = build_instance(spec)
        oracle = exact_kcut_oracle(g, k, max_n=None).cut_weight
        spec = InstanceSpec(spec.kind, {**spec.params, "k": k})
        reports.append(
            make_report(spec, "main_kcut", config_dict(cfg), seed,
                        lambda: main_kcut(g, k, cfg, seed).cut_weight, oracle)
        )
    return reports


def greedy_reports(specs, tie_break: str = "first") -> list[RunReport]:
    reports = []
    for spec, k in specs:
        g, _ = build_instance(spec)
        oracle = exact_kcut_oracle(g, k, max_n=None).cut_weight
        spec = InstanceSpec(spec.kind, {**spec.params, "k": k})
        reports.append(
            make_report(spec, "greedy_sv", {"tie_break": tie_break}, 0,
                        lambda: greedy_sv(g, k, tie_break).cut_weight, oracle)
        )
    return reports


def laminar_reports(specs, eps1: float = 0.02, delta: float = 0.01, seed: int = 0) -> list[RunReport]:
    """Laminar runs; the reference weight is the planted cost."""
    reports = []
    for spec, k in specs:
        g, planted = build_instance(spec)
        ref = planted.cut_weight if planted is not None else None
        reports.append(
            make_report(spec, "laminar", {"eps1": eps1, "delta": delta}, seed,
                        lambda: laminar(g, k, eps1, delta, seed=seed).partition.cut_weight, ref)
        )
    return reports


def pvc_reports(specs, delta: float = 0.1, seed: int = 0) -> list[RunReport]:
    reports = []
    for spec, k in specs:
        g, _ = build_instance(spec)
        inst = PvcInstance(g, k, delta)
        exact = pvc_bruteforce(inst).value
        spec = InstanceSpec(spec.kind, {**spec.params, "k": k})
        reports.append(
            make_report(spec, "pvc_general", {"delta": delta}, seed,
                        lambda: pvc_general(inst, seed).value, exact)
        )
    return reports


def run_suite(name: str, seed: int = 0, count: int | None = None) -> list[RunReport]:
    if name == "oracle":
        specs = random_kcut_specs(100 if count is None else count, seed)
        reports = main_reports(specs, seed) + greedy_reports(specs)
    elif name == "paper":
        specs = paper_specs()
        reports = main_reports(specs, seed)
        reports += greedy_reports(specs) + greedy_reports(specs, "adversarial")
        reports += laminar_reports(specs[2:], eps1=0.05, delta=0.01, seed=seed)
    elif name == "pvc":
        reports = pvc_reports(pvc_specs(200 if count is None else count, seed), seed=seed)
    else:
        raise ValueError(f"unknown suite {name!r}")
    ratios = Counter(
        round(r.ratio, 2) for r in reports if r.ratio is not None and r.algorithm["name"] == "main_kcut"
    )
    if ratios:
        log.info("main_kcut ratio histogram: %s", dict(sorted(ratios.items())))
    return reports


def graph_of(spec: InstanceSpec) -> WeightedGraph:
    return build_instance(spec)[0]
