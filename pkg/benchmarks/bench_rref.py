"""Compare the compiled and numpy row-reduction kernels on random F_p matrices.

Usage: python benchmarks/bench_rref.py [--sizes 64 128 256] [--p 7] [--repeat 3]
"""
import argparse
import time

import numpy as np

from loewykit import _kernels_py

try:
    from loewykit import _kernels
except ImportError:  # extension not built
    _kernels = None


def bench(fn, a, p, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(a, p)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[32, 64, 128, 256])
    ap.add_argument("--p", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'n':>6} {'numpy s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.sizes:
        a = rng.integers(0, args.p, size=(n, n), dtype=np.int64)
        t_py, r_py = bench(_kernels_py.rref_modp, a, args.p, args.repeat)
        if _kernels is None:
            print(f"{n:>6} {t_py:>10.4f} {'n/a':>10} {'n/a':>8}")
            continue
        t_cy, r_cy = bench(_kernels.rref_modp, a, args.p, args.repeat)
        assert np.array_equal(r_py[0], np.asarray(r_cy[0])) and list(r_py[1]) == list(r_cy[1])
        print(f"{n:>6} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>8.1f}")


if __name__ == "__main__":
    main()
