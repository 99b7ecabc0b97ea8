#!/usr/bin/env python3
"""Benchmark the numba kernel lane against the numpy fallback lane.

Both lanes compute identical int64 tables; this script times them on the
sweep sizes the verification suites actually use and prints the speedups.
The numba timings exclude the first (JIT-compiling) call.

Run:
    python benchmarks/bench_kernels.py [--max 2000] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

from qident._kernels import LANES, NUMBA_AVAILABLE


def _time(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    maxn = args.max

    cases = [
        ("signed_rep_tables", (maxn,)),
        ("square_rep_tables", (3, maxn)),
        ("triangular3_table", (min(maxn, 1000),)),
        ("triple_tables", (maxn, True)),
        ("triple_tables", (maxn, False)),
        ("pair_tables", (maxn,)),
        ("hlm_tables", (min(maxn, 1000),)),
        ("triangular_sum_side", (min(maxn, 1000) + 1,)),
    ]

    print(f"max n = {maxn}, repeats = {args.repeats}, "
          f"numba available = {NUMBA_AVAILABLE}")
    header = f"{'kernel':32s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))

    for name, call_args in cases:
        label = f"{name}{call_args}"
        t_np, out_np = _time(LANES["numpy"][name], call_args, args.repeats)
        if NUMBA_AVAILABLE:
            LANES["numba"][name](*call_args)  # compile outside the timing
            t_nb, out_nb = _time(LANES["numba"][name], call_args, args.repeats)
            same = (all((a == b).all() for a, b in zip(out_nb, out_np))
                    if isinstance(out_np, tuple) else (out_nb == out_np).all())
            if not same:
                print(f"{label:32s} LANES DISAGREE")
                return 1
            print(f"{label:32s} {t_np:9.4f}s {t_nb:9.4f}s {t_np / t_nb:7.1f}x")
        else:
            print(f"{label:32s} {t_np:9.4f}s {'n/a':>10s} {'n/a':>8s}")

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
