"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints one line per kernel with the best wall time of each backend and the
speedup. Results are also checked for agreement.
"""
import argparse
import time

import numpy as np

from kcut import _pykernels
from kcut.generators import gen_random_gnp

try:
    from kcut import _ckernels
except ImportError:
    _ckernels = None


def best_time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    w16 = gen_random_gnp(16, 0.5, 1).dense()
    w60 = gen_random_gnp(60, 0.3, 2).dense()
    w12 = gen_random_gnp(12, 0.6, 3).dense()
    g = gen_random_gnp(14, 0.3, 4)
    eu = np.array([u for u, _, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v, _ in g.edges], dtype=np.int64)
    ew = np.array([int(w) for _, _, w in g.edges], dtype=np.int64)
    lam = _pykernels.stoer_wagner(w16)[0]
    return [
        ("near_cuts n=16", lambda m: m.near_cuts(w16, 1.5 * lam), lambda r: len(r[0])),
        ("stoer_wagner n=60", lambda m: m.stoer_wagner(w60), lambda r: r[0]),
        ("min_kpartition n=12 k=4", lambda m: m.min_kpartition(w12, 4, float("inf")), lambda r: r[0]),
        (
            "pvc_best_coloring n=14 k=3",
            lambda m: m.pvc_best_coloring(14, 14, eu, ev, ew, 3, 1e9, None),
            lambda r: r[0],
        ),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':30s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, run, key in cases():
        tp, rp = best_time(lambda: run(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:30s} {tp:10.4f} {'-':>10s} {'-':>8s}")
            continue
        tc, rc = best_time(lambda: run(_ckernels), args.repeat)
        same = abs(key(rp) - key(rc)) <= 1e-9 * max(1.0, abs(key(rp)))
        flag = "" if same else "  MISMATCH"
        print(f"{name:30s} {tp:10.4f} {tc:10.4f} {tp / max(tc, 1e-9):8.1f}x{flag}")


if __name__ == "__main__":
    main()
