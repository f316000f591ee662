#!/usr/bin/env python3
"""Benchmark the short-vector enumeration kernel: numba vs plain Python.

Runs the same fixed-norm coset enumerations through both paths and prints
a timing table.  The plain path is the identical function without @njit,
which is also what VOAPLUS_JIT=0 selects at runtime.

Usage: python bench/bench_shortvec.py [--repeat N]
"""

import argparse
import time
from fractions import Fraction

from voaplus import parse_spec
from voaplus.kernels import HAVE_NUMBA, enumerate_offsets

CASES = [
    ("E8 roots", "E8", None, 2),
    ("Gamma16 roots", "Gamma16", None, 2),
    ("E8+E8 norm 4", "E8+E8", None, 4),
    ("sqrt2E8 coset sweep", "lb(rep(8))", "torsion2", 2),
    ("BW16-like coset sweep", "lb(rm14)", "torsion2", 2),
]


def run_case(lat, coset_mode, m, jit):
    gram = [list(r) for r in lat.gram]
    ginv = [float(lat.dual_gram[i][i]) for i in range(lat.rank)]
    total = 0
    if coset_mode is None:
        reps = [tuple(Fraction(0) for _ in range(lat.rank))]
    else:
        reps = [c.rep for c in lat.discriminant.torsion2_reps[:64]]
    for rep in reps:
        total += len(enumerate_offsets(gram, list(rep), Fraction(m), ginv,
                                       jit=jit))
    return total


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not HAVE_NUMBA:
        print("numba unavailable: benchmarking the plain path only")

    print("%-24s %12s %12s %9s" % ("case", "numba [s]", "plain [s]", "speedup"))
    for name, spec, coset_mode, m in CASES:
        lat = parse_spec(spec)
        run_case(lat, coset_mode, m, jit=True)   # warm the compile cache
        times = {}
        for jit in (True, False):
            if jit and not HAVE_NUMBA:
                continue
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                count = run_case(lat, coset_mode, m, jit=jit)
                best = min(best, time.perf_counter() - t0)
            times[jit] = best
        if HAVE_NUMBA:
            print("%-24s %12.4f %12.4f %8.1fx  (%d vectors)"
                  % (name, times[True], times[False],
                     times[False] / max(times[True], 1e-9), count))
        else:
            print("%-24s %12s %12.4f" % (name, "-", times[False]))


if __name__ == "__main__":
    main()
