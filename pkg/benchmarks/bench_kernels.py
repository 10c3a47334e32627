"""Benchmark the compiled capacity kernel against the pure-numpy fallback.

The workload is the inner loop of the exact optimizer: rate inversion by
bisection over the quadrature table, repeated across a spread of antenna
counts. Run with ``python benchmarks/bench_kernels.py``.
"""

import argparse
import statistics
import time

from mimo_ee import _capacity_fallback
from mimo_ee.capacity import _quad_table

try:
    from mimo_ee import _capacity_kernel
except ImportError:
    _capacity_kernel = None

M_GRID = (2, 4, 8, 16, 32, 64, 128, 256)
RATES = (1.0, 3.0, 5.0, 8.0, 12.0)


def workload(impl, nodes_weights):
    total = 0.0
    for (nodes, weights), M in zip(nodes_weights, M_GRID):
        for R in RATES:
            scale = 2.0 ** R - 1.0
            gamma, _, _ = impl.bisect_rate(
                nodes, weights, R, scale / M, scale / (M - 1), 1e-9, 200)
            total += gamma
    return total


def time_impl(impl, nodes_weights, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        workload(impl, nodes_weights)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=128,
                        help="quadrature node count (default 128)")
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()

    tables = [_quad_table(M, args.nodes) for M in M_GRID]
    inversions = len(M_GRID) * len(RATES)
    print(f"workload: {inversions} rate inversions, "
          f"{args.nodes} quadrature nodes, best of {args.repeats}")

    ref = workload(_capacity_fallback, tables)
    best_py, med_py = time_impl(_capacity_fallback, tables, args.repeats)
    print(f"python  : best {best_py * 1e3:8.3f} ms   "
          f"median {med_py * 1e3:8.3f} ms")

    if _capacity_kernel is None:
        print("cython  : extension not built; skipping")
        return

    assert abs(workload(_capacity_kernel, tables) - ref) <= 1e-9 * abs(ref)
    best_cy, med_cy = time_impl(_capacity_kernel, tables, args.repeats)
    print(f"cython  : best {best_cy * 1e3:8.3f} ms   "
          f"median {med_cy * 1e3:8.3f} ms")
    print(f"speedup : {best_py / best_cy:.2f}x (best), "
          f"{med_py / med_cy:.2f}x (median)")


if __name__ == "__main__":
    main()
