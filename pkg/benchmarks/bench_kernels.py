"""Compare the compiled and pure-Python row-test kernels.

    python benchmarks/bench_kernels.py [--t 7] [--hi-bits 6] [--repeat 3]
"""

import argparse
import time

import numpy as np

from hadz import kernels


def candidates(t: int, hi_bits: int) -> tuple[np.ndarray, np.ndarray]:
    lo_bits = min(14, 4 * t - 3)
    hi_bits = max(0, min(hi_bits, 4 * t - 3 - lo_bits))
    lo = np.arange(1 << lo_bits, dtype=np.uint64) << np.uint64(1)
    hi = np.arange(1 << hi_bits, dtype=np.uint64) << np.uint64(lo_bits + 1)
    return lo, hi


def bench(t: int, lo, hi, backend: str, repeat: int) -> tuple[float, int]:
    best, hits = float("inf"), 0
    for _ in range(repeat):
        start = time.perf_counter()
        hits = len(kernels.scan_product(t, lo, hi, backend=backend))
        best = min(best, time.perf_counter() - start)
    return best, hits


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--t", type=int, default=7)
    p.add_argument("--hi-bits", type=int, default=6)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()

    lo, hi = candidates(args.t, args.hi_bits)
    n = len(lo) * len(hi)
    backends = ["python"] + (["compiled"] if kernels.BACKEND == "compiled" else [])
    print(f"t={args.t}: {n} candidates, default backend {kernels.BACKEND}")
    times = {}
    for b in backends:
        secs, hits = bench(args.t, lo, hi, b, args.repeat)
        times[b] = secs
        print(f"  {b:>8}: {secs:8.3f} s  {secs / n * 1e9:7.1f} ns/candidate  {hits} hits")
    if len(times) == 2:
        print(f"  speedup: {times['python'] / times['compiled']:.1f}x")
    else:
        print("  compiled kernels not built; nothing to compare")


if __name__ == "__main__":
    main()
