"""Benchmark the compiled mod-p rank kernel against the pure-Python fallback.

Usage: python bench/bench_modrank.py [--sizes 50,100,200] [--reps 5]
"""

import argparse
import random
import time

from jumploci.exact import linalg
from jumploci.exact import _modrank_py

try:
    from jumploci.exact import _modrank
except ImportError:
    _modrank = None

P = 2147483647


def bench(impl, flat, m, n, reps):
    best = float("inf")
    rank = None
    for _ in range(reps):
        t0 = time.perf_counter()
        rank = impl.rank_mod_p(list(flat), m, n, P)
        best = min(best, time.perf_counter() - t0)
    return best, rank


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print("active kernel: %s" % ("compiled" if linalg.HAVE_COMPILED_KERNEL else "pure python"))
    print("%8s %14s %14s %9s" % ("size", "pure (ms)", "compiled (ms)", "speedup"))
    for size in [int(s) for s in args.sizes.split(",")]:
        m = n = size
        flat = [rng.randrange(P) for _ in range(m * n)]
        t_py, r_py = bench(_modrank_py, flat, m, n, args.reps)
        if _modrank is None:
            print("%8d %14.2f %14s %9s" % (size, t_py * 1e3, "n/a", "n/a"))
            continue
        t_c, r_c = bench(_modrank, flat, m, n, args.reps)
        assert r_py == r_c, "kernel disagreement at size %d" % size
        print("%8d %14.2f %14.2f %8.1fx" % (size, t_py * 1e3, t_c * 1e3, t_py / t_c))


if __name__ == "__main__":
    main()
