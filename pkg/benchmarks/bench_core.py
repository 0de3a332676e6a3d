"""Benchmark the compiled scan kernel against the pure-Python fallback.

Runs the same enumeration-plus-key scan through both implementations and
reports wall times and speedup.  Usage:

    python benchmarks/bench_core.py [--dim 3] [--max-degree 16] [--max-codim 6]
"""

import argparse
import time

from citopo import _core_py

try:
    from citopo import _core_cy
except ImportError:
    _core_cy = None


def bench(impl, n, max_degree, max_codim, power_mode, repeats):
    d1_values = list(range(2, max_degree + 1))
    best = float("inf")
    count = 0
    for _ in range(repeats):
        start = time.perf_counter()
        out = impl.scan(n, max_degree, 1, max_codim, None, power_mode, d1_values)
        best = min(best, time.perf_counter() - start)
        count = len(out)
    return best, count


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--dim", type=int, default=3)
    parser.add_argument("--max-degree", type=int, default=16)
    parser.add_argument("--max-codim", type=int, default=6)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    for power_mode, label in ((False, "invariant keys"), (True, "power-sum keys")):
        t_py, count = bench(_core_py, args.dim, args.max_degree, args.max_codim,
                            power_mode, args.repeats)
        print(f"{label}: {count} multidegrees")
        print(f"  pure python: {t_py:.3f}s  ({count / t_py:,.0f}/s)")
        if _core_cy is None:
            print("  compiled kernel not built; skipping comparison")
            continue
        t_cy, count_cy = bench(_core_cy, args.dim, args.max_degree, args.max_codim,
                               power_mode, args.repeats)
        assert count_cy == count
        print(f"  cython:      {t_cy:.3f}s  ({count / t_cy:,.0f}/s)")
        print(f"  speedup:     {t_py / t_cy:.2f}x")


if __name__ == "__main__":
    main()
