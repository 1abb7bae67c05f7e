#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the three hot paths (trial loop without flows, trial loop with
k-connectivity flows, exhaustive enumeration) on both backends and prints
the speedups. The pure backend gets proportionally fewer repetitions; both
are checked to produce identical results on the shared portion.

Usage: python benchmarks/compare_backends.py
"""

import time

from koutgraph._backend import compiled_kernel, pure_kernel
from koutgraph.rng import derive_seed


def time_call(fn, *args):
    t0 = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - t0, result


def bench_run_trials(kernel, n, mu, k2, k, trials, seed_tag):
    seeds = [derive_seed(seed_tag, t) for t in range(trials)]
    dt, result = time_call(kernel.run_trials, n, mu, 1, k2, k, seeds)
    return dt / trials, result


def bench_enum(kernel, n, k2):
    dt, result = time_call(kernel.enum_profile, n, 1, k2, 0)
    return dt, result


def main():
    compiled = compiled_kernel()
    pure = pure_kernel()
    if compiled is None:
        raise SystemExit("compiled kernel not built; run pip install -e .")

    print(f"{'benchmark':<42} {'compiled':>12} {'pure':>12} {'speedup':>9}")

    cases = [
        ("trials n=500 mu=0.5 k2=13 k=2 (no flows)", 500, 0.5, 13, 2, 2000, 50),
        ("trials n=500 mu=0.5 k2=20 k=3 (flows)", 500, 0.5, 20, 3, 200, 20),
        ("trials n=500 mu=0.9 k2=99 k=4 (flows)", 500, 0.9, 99, 4, 100, 10),
    ]
    for name, n, mu, k2, k, ct, pt in cases:
        c_per, c_res = bench_run_trials(compiled, n, mu, k2, k, ct, seed_tag=1)
        p_per, p_res = bench_run_trials(pure, n, mu, k2, k, pt, seed_tag=1)
        # same seeds prefix: results must agree on the shared trials
        shared = [derive_seed(1, t) for t in range(pt)]
        assert compiled.run_trials(n, mu, 1, k2, k, shared) == pure.run_trials(
            n, mu, 1, k2, k, shared
        )
        print(
            f"{name:<42} {c_per * 1e3:>9.3f} ms {p_per * 1e3:>9.3f} ms "
            f"{p_per / c_per:>8.1f}x"
        )

    for n, k2 in ((5, 2), (5, 3)):
        c_dt, c_res = bench_enum(compiled, n, k2)
        p_dt, p_res = bench_enum(pure, n, k2)
        import numpy as np

        for key in c_res:
            assert np.array_equal(np.asarray(c_res[key]), np.asarray(p_res[key]))
        name = f"enumeration n={n} k2={k2}"
        print(f"{name:<42} {c_dt * 1e3:>9.3f} ms {p_dt * 1e3:>9.3f} ms {p_dt / c_dt:>8.1f}x")


if __name__ == "__main__":
    main()
