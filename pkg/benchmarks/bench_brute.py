"""Time the brute-force histogram kernel under both backends.

    python3 benchmarks/bench_brute.py [--q 3] [--n 8 9 10] [--repeat 3]

Each case is checked for identical histograms across backends before timing is
reported.  The numba time excludes the first (compiling) call.
"""

import argparse
import time

import numpy as np

from multiroot._jit import HAVE_NUMBA
from multiroot.kernels import brute_histogram_array


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--n", type=int, nargs="+", default=[6, 8, 9, 10])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if HAVE_NUMBA:
        brute_histogram_array(args.q, 2, backend="numba")  # warm the JIT cache

    print(f"{'q':>3} {'n':>3} {'monics':>10} " + " ".join(f"{b + ' [s]':>12}" for b in backends) + f" {'speedup':>8}")
    for n in args.n:
        timings, hists = {}, {}
        for b in backends:
            timings[b], hists[b] = best_of(lambda: brute_histogram_array(args.q, n, backend=b), args.repeat)
        if len(hists) == 2 and not np.array_equal(hists["numpy"], hists["numba"]):
            raise SystemExit(f"backends disagree at q={args.q}, n={n}")
        speed = f"{timings['numpy'] / timings['numba']:8.1f}" if HAVE_NUMBA else f"{'-':>8}"
        print(f"{args.q:>3} {n:>3} {args.q ** n:>10} " + " ".join(f"{timings[b]:12.4f}" for b in backends) + f" {speed}")


if __name__ == "__main__":
    main()
