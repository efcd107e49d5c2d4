"""Benchmark the compiled kernels against the pure-Python/numpy fallback.

Times scalar and batch evaluation of both indicator families, plus a full
axiom-verification sweep, under each available backend.  Run directly:

    python3 benchmarks/bench_backends.py [--count 200000] [--repeats 5]
"""
import argparse
import math
import time

import numpy as np


def load_backends():
    from changekit import _kernels_py

    backends = {"python": _kernels_py}
    try:
        from changekit import _kernels

        backends["compiled"] = _kernels
    except ImportError:
        pass
    return backends


def best_of(repeats, fn):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_scalar(kernels, xs, ys, lam, repeats):
    f, F = kernels.f_scalar, kernels.F_scalar

    def run():
        for x, y in zip(xs, ys):
            f(lam, x, y)
            F(lam, x, y)

    return best_of(repeats, run)


def bench_batch(kernels, xs, ys, lam, repeats):
    out = np.empty(len(xs))

    def run():
        kernels.f_many(lam, xs, ys, out)
        kernels.F_many(lam, xs, ys, out)

    return best_of(repeats, run)


def bench_verify(kernels, count, repeats):
    # the axiom checkers route through the active backend, so monkey-patch it
    from changekit import _backend
    from changekit.axioms import SampleConfig, check_relative_scaling, f_indicator

    saved = _backend.kernels
    _backend.kernels = kernels
    try:
        cfg = SampleConfig(seed=7, count=count)
        return best_of(repeats, lambda: check_relative_scaling(f_indicator(0.5), cfg))
    finally:
        _backend.kernels = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200_000, help="batch size")
    parser.add_argument("--scalar-count", type=int, default=20_000)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--lam", type=float, default=0.5)
    args = parser.parse_args()

    backends = load_backends()
    rng = np.random.default_rng(12345)
    xs = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), args.count))
    ys = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), args.count))
    sx, sy = xs[: args.scalar_count], ys[: args.scalar_count]

    rows = []
    for name, kernels in sorted(backends.items()):
        rows.append((name, "scalar f+F", args.scalar_count, bench_scalar(kernels, sx, sy, args.lam, args.repeats)))
        rows.append((name, "batch f+F", args.count, bench_batch(kernels, xs, ys, args.lam, args.repeats)))
        rows.append((name, "verify sweep", args.count, bench_verify(kernels, args.count, args.repeats)))

    print(f"{'backend':<10} {'workload':<14} {'n':>9} {'best (ms)':>10} {'ns/elem':>9}")
    for name, workload, n, secs in rows:
        print(f"{name:<10} {workload:<14} {n:>9} {secs * 1e3:>10.3f} {secs / n * 1e9:>9.1f}")

    if "compiled" in backends and "python" in backends:
        by = {(r[0], r[1]): r[3] for r in rows}
        for workload in ("scalar f+F", "batch f+F", "verify sweep"):
            speedup = by[("python", workload)] / by[("compiled", workload)]
            print(f"compiled speedup on {workload}: {speedup:.2f}x")


if __name__ == "__main__":
    main()
