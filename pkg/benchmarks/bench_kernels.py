#!/usr/bin/env python3
"""Benchmark the compiled row-building kernel against the pure-Python one.

Run:
    python benchmarks/bench_kernels.py [--max-rank 16] [--repeat 5]

Table construction is the hot loop of everything downstream (the stored
rows answer all later queries in O(1)), so this is the number that decides
whether the extension is worth shipping.
"""

import argparse
import time

import numpy as np

from laver.kernels import _fallback

try:
    from laver.kernels import _rowbuild
except ImportError:
    _rowbuild = None


def best_of(fn, n, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(n, 1 << 32)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'n':>3} {'entries':>12} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for n in range(8, args.max_rank + 1):
        t_pure, (v_pure, o_pure) = best_of(_fallback.build_rows, n, args.repeat)
        if _rowbuild is not None:
            t_ext, (v_ext, o_ext) = best_of(_rowbuild.build_rows, n, args.repeat)
            assert np.array_equal(v_pure, v_ext) and np.array_equal(o_pure, o_ext)
            ext_col = f"{t_ext * 1e3:9.2f}ms"
            speedup = f"{t_pure / t_ext:7.1f}x"
        else:
            ext_col = "      n/a"
            speedup = "     n/a"
        print(f"{n:>3} {len(v_pure):>12,} {t_pure * 1e3:9.2f}ms {ext_col} {speedup}")
    if _rowbuild is None:
        print("\ncompiled kernel not built; install with Cython available to compare")


if __name__ == "__main__":
    main()
