#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twin.

Runs the same workloads through both backends and prints a table of
timings and speedups.  The outputs are asserted equal along the way, so
this doubles as a coarse differential check.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from stretchlab._kernels import _pure

try:
    from stretchlab._kernels import _speedups
except ImportError:
    _speedups = None


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return time.perf_counter() - start, out


def bench_charpoly(impl, matrices):
    return [impl.charpoly(rows) for rows in matrices]


def bench_scan(impl, n, max_entry):
    total = (max_entry + 1) ** (n * n)
    return impl.scan_primitive_unit_det(n, max_entry, 0, total, True)


def bench_clique_identity(impl, matrices):
    return [impl.clique_identity_holds(rows, 10**5, 10**6) for rows in matrices]


def bench_cycles(impl, matrices):
    return [impl.simple_cycle_classes(rows, 10**5) for rows in matrices]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernels not built; nothing to compare")
        return 1

    rng = random.Random(2024)
    n_mats = 300 if args.quick else 2000
    charpoly_mats = [
        [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)] for _ in range(n_mats)
    ]
    clique_mats = [
        [[rng.randint(0, 2) for _ in range(4)] for _ in range(4)]
        for _ in range(n_mats // 2)
    ]

    workloads = [
        (f"charpoly 5x5 x{n_mats}", lambda i: bench_charpoly(i, charpoly_mats)),
        ("scan n=3 entries<=1 (512)", lambda i: bench_scan(i, 3, 1)),
        ("scan n=4 entries<=1 (65536)", lambda i: bench_scan(i, 4, 1)),
        (f"clique identity 4x4 x{len(clique_mats)}", lambda i: bench_clique_identity(i, clique_mats)),
        (f"cycle classes 4x4 x{len(clique_mats)}", lambda i: bench_cycles(i, clique_mats)),
    ]

    print(f"{'workload':<34} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, job in workloads:
        t_pure, out_pure = timed(lambda: job(_pure))
        t_fast, out_fast = timed(lambda: job(_speedups))
        assert out_pure == out_fast, f"backend mismatch in {name}"
        print(f"{name:<34} {t_pure:>9.3f}s {t_fast:>9.3f}s {t_pure / t_fast:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
