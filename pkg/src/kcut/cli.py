"""Command-line interface: ``kcut <command> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from kcut import bench
from kcut.cuts import exact_kcut_oracle, global_mincut, greedy_sv, min_four_cut
from kcut.generators import gen_planted_laminar, gen_random_gnp, gen_star_pvc, gen_two_clique
from kcut.graph import GraphError, Partition
from kcut.io import FormatError, read_graph, write_graph
from kcut.laminar import laminar
from kcut.pvc import PvcInstance, pvc_general
from kcut.reduction import EpsilonConfig, config_from, default_config, main_kcut
from kcut.report import InstanceSpec, dumps_reports, make_report
from kcut.tree import build_mincut_tree

log = logging.getLogger("kcut")

EXIT_OK, EXIT_ALGO, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(w: float) -> str:
    return repr(float(w))


def _print_partition(p: Partition) -> None:
    for part in p.as_lists():
        print(" ".join(map(str, part)))
    print(f"weight {_fmt(p.cut_weight)}")


def _emit(args, name: str, config: dict, run, oracle=None) -> int:
    """Run ``run`` (returning a Partition), print it or a RunReport."""
    box = {}

    def go():
        box["p"] = run()
        return box["p"].cut_weight

    rep = make_report(
        InstanceSpec("file", {"path": str(args.file)}), name, config, getattr(args, "seed", 0), go, oracle
    )
    if args.json:
        print(rep.to_json())
    else:
        _print_partition(box["p"])
    return EXIT_OK


def _load(path):
    try:
        return read_graph(path)
    except (OSError, FormatError) as e:
        raise UsageError(f"cannot read {path}: {e}") from None


def _load_config(path) -> EpsilonConfig:
    if path is None:
        return default_config()
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read config {path}: {e}") from None
    if set(data) == {"delta"}:
        cfg = config_from(float(data["delta"]))
    else:
        try:
            cfg = EpsilonConfig(**{k: float(v) for k, v in data.items()})
        except TypeError as e:
            raise UsageError(f"bad config: {e}") from None
    bad = cfg.violations()
    if bad:
        raise UsageError("bad config: " + "; ".join(bad))
    return cfg


# -- commands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "two_clique":
        g = gen_two_clique(args.k)
    elif args.kind == "planted_laminar":
        g, planted = gen_planted_laminar(args.k, args.n_per_part, args.eps1, args.seed)
        print(f"planted weight {_fmt(planted.cut_weight)}", file=sys.stderr)
    elif args.kind == "random_gnp":
        if args.n is None:
            raise UsageError("random_gnp needs -n")
        g = gen_random_gnp(args.n, args.p, args.seed, wmin=args.wmin, wmax=args.wmax)
    else:
        if args.n is None:
            raise UsageError("star_pvc needs -n")
        g = gen_star_pvc(args.n, args.seed)
    write_graph(g, args.output)
    return EXIT_OK


def cmd_mincut(args) -> int:
    g = _load(args.file)

    def run():
        c = global_mincut(g)
        return Partition.of(g, [c.side, g.vertex_set - c.side])

    return _emit(args, "global_mincut", {}, run)


def cmd_min4cut(args) -> int:
    g = _load(args.file)
    return _emit(args, "min_four_cut", {"mode": args.mode},
                 lambda: min_four_cut(g, mode=args.mode, seed=args.seed))


def cmd_oracle(args) -> int:
    g = _load(args.file)
    return _emit(args, "exact_kcut_oracle", {}, lambda: exact_kcut_oracle(g, args.k))


def cmd_pvc(args) -> int:
    g = _load(args.file)
    sol = pvc_general(PvcInstance(g, args.k, args.delta), args.seed)
    if args.json:
        rep = make_report(InstanceSpec("file", {"path": str(args.file)}), "pvc_general",
                          {"delta": args.delta, "k": args.k}, args.seed, lambda: sol.value)
        print(rep.to_json())
    else:
        print(" ".join(map(str, sorted(sol.chosen))))
        print(f"value {_fmt(sol.value)}")
    return EXIT_OK


def cmd_laminar(args) -> int:
    g = _load(args.file)
    return _emit(args, "laminar", {"eps1": args.eps1, "delta": args.delta},
                 lambda: laminar(g, args.k, args.eps1, args.delta, seed=args.seed).partition)


def cmd_solve(args) -> int:
    g = _load(args.file)
    cfg = _load_config(args.config)
    return _emit(args, "main_kcut", bench.config_dict(cfg),
                 lambda: main_kcut(g, args.k, cfg, args.seed))


def cmd_baseline(args) -> int:
    g = _load(args.file)
    return _emit(args, "greedy_sv", {"tie_break": args.tie_break},
                 lambda: greedy_sv(g, args.k, args.tie_break))


def cmd_bench(args) -> int:
    reports = bench.run_suite(args.suite, seed=args.seed, count=args.count)
    text = dumps_reports(reports)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_dump_tree(args) -> int:
    g = _load(args.file)
    sys.stdout.write(build_mincut_tree(g, args.eps1).dump())
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kcut", description="Minimum k-cut tools.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=["two_clique", "planted_laminar", "random_gnp", "star_pvc"])
    p.add_argument("-k", type=int, default=3)
    p.add_argument("-n", type=int)
    p.add_argument("-p", type=float, default=0.5)
    p.add_argument("--n-per-part", type=int, default=4)
    p.add_argument("--eps1", type=float, default=0.05)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    def graph_cmd(name, func, help, *, k=False, seed=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("file")
        if k:
            p.add_argument("-k", type=int, required=True)
        if seed:
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true", help="print a RunReport instead")
        p.set_defaults(func=func)
        return p

    graph_cmd("mincut", cmd_mincut, "global minimum cut")
    p = graph_cmd("min4cut", cmd_min4cut, "minimum 4-cut", seed=True)
    p.add_argument("--mode", choices=["auto", "exact", "randomized"], default="auto")
    graph_cmd("oracle", cmd_oracle, "exact minimum k-cut (small graphs)", k=True)
    p = graph_cmd("pvc", cmd_pvc, "partial vertex cover", k=True, seed=True)
    p.add_argument("--delta", type=float, default=0.1)
    p = graph_cmd("laminar", cmd_laminar, "k-cut under the laminar promise", k=True, seed=True)
    p.add_argument("--eps1", type=float, default=0.05)
    p.add_argument("--delta", type=float, default=0.01)
    p = graph_cmd("solve", cmd_solve, "approximate minimum k-cut", k=True, seed=True)
    p.add_argument("--config", help="JSON with eps1..eps5/eps3_final/delta, or just delta")
    p = graph_cmd("baseline", cmd_baseline, "greedy mincut splitting", k=True)
    p.add_argument("--tie-break", choices=["first", "adversarial"], default="first")

    p = sub.add_parser("bench", help="run a benchmark suite")
    p.add_argument("--suite", choices=bench.SUITES, required=True)
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="instances for the oracle/pvc suites")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("dump-tree", help="print the near-mincut tree")
    p.add_argument("file")
    p.add_argument("--eps1", type=float, default=0.05)
    p.set_defaults(func=cmd_dump_tree)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"kcut: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as e:
        print(f"kcut: {e}", file=sys.stderr)
        return EXIT_ALGO
    except ValueError as e:
        print(f"kcut: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
