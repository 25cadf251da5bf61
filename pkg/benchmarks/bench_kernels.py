"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--pmax 10000] [--pairs 500] [--repeat 3]

Both implementations are called directly, so the TORICOH_DISABLE_NUMBA flag
does not matter here. Results are checked for equality before timing.
"""

import argparse
import time
from math import gcd

import numpy as np

from toricoh.kernels import cfrac, enumeration


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_pairs(n, bound=12, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        vx, vy, wx, wy = (int(x) for x in rng.integers(-bound, bound + 1, size=4))
        if gcd(vx, vy) == 1 and gcd(wx, wy) == 1 and vx * wy - vy * wx > 0:
            out.append((vx, vy, wx, wy, 2 * bound))
    return out


def slice_sweep(kernel, dmax=200):
    for p in range(1, 26):
        for q in range(p):
            if gcd(p, q) == 1:
                kernel(p, q, dmax)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmax", type=int, default=10_000)
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    # compile outside the timed region
    cfrac.roundtrip_numba(10)
    enumeration.slice_counts_numba(2, 1, 5)
    enumeration.normal_form_numba(1, 0, 1, 2, 4)

    pairs = random_pairs(args.pairs)
    assert tuple(cfrac.roundtrip_numba(500)) == cfrac.roundtrip_numpy(500)
    assert all(tuple(enumeration.normal_form_numba(*a)) == enumeration.normal_form_numpy(*a)
               for a in pairs[:50])

    cases = [
        (f"cf round trip, p <= {args.pmax}",
         lambda: cfrac.roundtrip_numba(args.pmax), lambda: cfrac.roundtrip_numpy(args.pmax)),
        ("slice counts, p,q <= 25, d <= 200",
         lambda: slice_sweep(enumeration.slice_counts_numba),
         lambda: slice_sweep(enumeration.slice_counts_numpy)),
        (f"normal form search, {args.pairs} pairs",
         lambda: [enumeration.normal_form_numba(*a) for a in pairs],
         lambda: [enumeration.normal_form_numpy(*a) for a in pairs]),
    ]
    print(f"{'kernel':<40} {'numba [s]':>10} {'numpy [s]':>10} {'ratio':>7}")
    for name, fast, slow in cases:
        tn = best_of(fast, args.repeat)
        tp = best_of(slow, args.repeat)
        print(f"{name:<40} {tn:>10.3f} {tp:>10.3f} {tp / tn:>7.1f}")


if __name__ == "__main__":
    main()
