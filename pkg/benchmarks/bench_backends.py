"""Benchmark the numba kernels against the pure-numpy fallbacks.

Run:  python benchmarks/bench_backends.py [--p 500009] [--repeats 5]

Times the three hot kernels (dlog table construction, character-pair
histogram, brute-force affine count) under both backends, plus one
end-to-end trace sweep through the public API under whichever backend is
active (set STJAC_BACKEND=numpy to sweep on the fallback).
"""

import argparse
import time

from stjac import _accel
from stjac.pointcount import ADDITIVE, curve, trace_sweep
from stjac.primes import prime_range


def best_of(repeats, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--p", type=int, default=500009)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    p = args.p
    if p % 2 == 0:
        raise SystemExit("p must be an odd prime")

    if not _accel._HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    from stjac._accel import (
        affine_count_numba,
        affine_count_numpy,
        char_pair_histogram_numba,
        char_pair_histogram_numpy,
        dlog_table_numba,
        dlog_table_numpy,
    )
    from stjac.ffield import smallest_primitive_root

    g = smallest_primitive_root(p)
    n = p - 1

    # warm up the JIT before timing
    dlog_table_numba(101, 2)
    table_small = dlog_table_numba(101, 2)
    char_pair_histogram_numba(table_small, 1, 50, 100)
    affine_count_numba(101, 9, 1, False)

    rows = []
    t_nb, table = best_of(args.repeats, dlog_table_numba, p, g)
    t_np, table_np = best_of(args.repeats, dlog_table_numpy, p, g)
    assert (table == table_np).all()
    rows.append(("dlog_table", t_nb, t_np))

    t_nb, h1 = best_of(args.repeats, char_pair_histogram_numba, table, 7, n // 2, n)
    t_np, h2 = best_of(args.repeats, char_pair_histogram_numpy, table, 7, n // 2, n)
    assert (h1 == h2).all()
    rows.append(("char_pair_histogram", t_nb, t_np))

    t_nb, c1 = best_of(args.repeats, affine_count_numba, p, 9, 3, False)
    t_np, c2 = best_of(args.repeats, affine_count_numpy, p, 9, 3, False)
    assert c1 == c2
    rows.append(("affine_count (additive)", t_nb, t_np))

    t_nb, c1 = best_of(args.repeats, affine_count_numba, p, 7, 3, True)
    t_np, c2 = best_of(args.repeats, affine_count_numpy, p, 7, 3, True)
    assert c1 == c2
    rows.append(("affine_count (linear)", t_nb, t_np))

    print(f"p = {p}, generator = {g}, backend in use: {_accel.BACKEND}")
    print(f"{'kernel':<26} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name, t_numba, t_numpy in rows:
        print(f"{name:<26} {t_numba * 1e3:>8.2f}ms {t_numpy * 1e3:>8.2f}ms "
              f"{t_numpy / t_numba:>8.1f}x")

    n_primes = len(prime_range(3, 5000))
    t0 = time.perf_counter()
    trace_sweep(curve(ADDITIVE, 9, 1), 3, 5000)
    dt = time.perf_counter() - t0
    print(f"\nend-to-end sweep of y^2=x^9+1 over {n_primes} primes to 5000: "
          f"{dt:.2f}s on the {_accel.BACKEND} backend")


if __name__ == "__main__":
    main()
