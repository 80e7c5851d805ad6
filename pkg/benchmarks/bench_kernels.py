#!/usr/bin/env python3
"""Benchmark the compiled composition kernel against the pure-Python path.

The workload is the brute-force sweep behind the composition identity: for
each l it sums over all compositions of every m <= l (2^(m-1) terms per
cell, so the cost doubles with each extra l).  Both backends compute the
same exact integers; the sweep asserts agreement while timing.

Usage: python3 benchmarks/bench_kernels.py [--l-max 18] [--repeat 3]
"""

import argparse
import time

from catalemma import _kernels


def sweep(fn, l_max: int) -> list[int]:
    out = []
    for l in range(1, l_max + 1):
        for m in range(1, l + 1):
            out.append(fn(l, m))
    return out


def best_time(fn, l_max: int, repeat: int) -> tuple[float, list[int]]:
    best = float("inf")
    values = None
    for _ in range(repeat):
        start = time.perf_counter()
        values = sweep(fn, l_max)
        best = min(best, time.perf_counter() - start)
    return best, values


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--l-max", type=int, default=18)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    cells = args.l_max * (args.l_max + 1) // 2
    compositions = sum(2 ** (m - 1) for l in range(1, args.l_max + 1) for m in range(1, l + 1))
    print(f"sweep: l <= {args.l_max} ({cells} cells, {compositions} compositions)")

    pure_time, pure_vals = best_time(
        _kernels.signed_composition_sum_pure, args.l_max, args.repeat
    )
    print(f"pure python : {pure_time * 1000:9.1f} ms")

    if _kernels.backend() != "compiled":
        print("compiled    : unavailable (install built without the extension)")
        return 0

    comp_time, comp_vals = best_time(
        _kernels.signed_composition_sum_compiled, args.l_max, args.repeat
    )
    assert comp_vals == pure_vals, "backends disagree"
    print(f"compiled    : {comp_time * 1000:9.1f} ms")
    print(f"speedup     : {pure_time / comp_time:9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
