#!/usr/bin/env python3
"""Benchmark the compiled sweep kernels against the pure-Python fallback.

Runs the same three hot workloads through both kernel modules and prints
wall times and speedups:

  two-term   complete two-term scans for every reduced p/q, q <= Q
  lp1        offset-2 floor-inequality box up to q_max
  lp11       offset-3 floor-inequality box up to q_max

Usage:
  python benchmarks/bench_backends.py [--q-two-term 150] [--q-lemma 400] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time
from math import gcd

from egfrac import _kernels_py

try:
    from egfrac import _kernels_c
except ImportError:
    _kernels_c = None


def workload_two_term(kernels, q_max: int) -> int:
    touched = 0
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                kernels.two_term_scan(p, q)
                touched += 1
    return touched


def workload_lp1(kernels, q_max: int) -> int:
    touched = 0
    for q in range(4, q_max + 1):
        for u in range(2, (q + 2) // 3 + 1):
            if (q + 2) % u:
                continue
            for s in range(1, u):
                for v in (1, 2):
                    kernels.lp1_point(q, u, s, v)
                    touched += 1
    return touched


def workload_lp11(kernels, q_max: int) -> int:
    touched = 0
    for q in range(5, q_max + 1):
        for u in range(2, (q + 3) // 4 + 1):
            if (q + 3) % u:
                continue
            for s in range(1, u):
                for v in (1, 2, 3):
                    kernels.lp11_point(q, u, s, v)
                    touched += 1
    return touched


def time_workload(fn, kernels, size: int, repeat: int) -> tuple[float, int]:
    best = float("inf")
    points = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        points = fn(kernels, size)
        best = min(best, time.perf_counter() - t0)
    return best, points


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q-two-term", type=int, default=150)
    parser.add_argument("--q-lemma", type=int, default=400)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        ("two-term", workload_two_term, args.q_two_term),
        ("lp1", workload_lp1, args.q_lemma),
        ("lp11", workload_lp11, args.q_lemma),
    ]

    print(f"{'workload':<10} {'points':>8} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, fn, size in workloads:
        pure_t, points = time_workload(fn, _kernels_py, size, args.repeat)
        if _kernels_c is None:
            print(f"{name:<10} {points:>8} {pure_t:>10.4f} {'n/a':>13} {'n/a':>8}")
            continue
        comp_t, comp_points = time_workload(fn, _kernels_c, size, args.repeat)
        assert comp_points == points
        print(
            f"{name:<10} {points:>8} {pure_t:>10.4f} {comp_t:>13.4f} "
            f"{pure_t / comp_t:>7.1f}x"
        )
    if _kernels_c is None:
        print("\ncompiled kernels not built; only the pure backend was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
