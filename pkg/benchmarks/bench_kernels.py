"""Compare the compiled and pure-Python lattice-point scan kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from ehrlift import kernels
from ehrlift.polytope import Polytope, standard_polytopes


def cases():
    polys = standard_polytopes()
    yield "cube", polys["cube"], 40
    yield "chengyang2", polys["chengyang2"], 60
    yield "simplex4", Polytope([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]), 30
    yield "triangle", polys["triangle"], 800


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.COMPILED_AVAILABLE:
        print("compiled kernel not built; only the Python fallback is timed")
    print(f"{'case':<12}{'op':<7}{'n':>5}{'points':>10}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, P, n in cases():
        levels, radius = P._scan_levels(n, False), P._radius(n)
        for op, fn in (("count", kernels.scan_count), ("scan", kernels.scan)):
            tp, res = best_of(lambda: fn(levels, backend="python"), args.repeat)
            size = res if op == "count" else len(res)
            row = f"{name:<12}{op:<7}{n:>5}{size:>10}{tp:>11.4f}"
            if kernels.COMPILED_AVAILABLE:
                tc, res_c = best_of(lambda: fn(levels, radius, backend="cython"), args.repeat)
                assert res_c == res
                row += f"{tc:>11.4f}{tp / tc:>8.1f}x"
            else:
                row += f"{'-':>11}{'-':>9}"
            print(row)


if __name__ == "__main__":
    main()
