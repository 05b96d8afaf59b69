"""Compare the compiled main-series kernel against the numpy fallback.

Run:  python3 benchmarks/bench_kernel.py [--blocks N] [--block-size M]

The hot loop of any long cache build is the main-series evaluation of Z
over quadrature nodes, so the benchmark times exactly that call shape:
contiguous blocks of nodes at cache-build heights.  Both backends are
loaded side by side; agreement is checked before timing.
"""
import argparse
import os
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from zetaladder import engine  # noqa: E402
from zetaladder import _zkernel_py  # noqa: E402

try:
    from zetaladder import _zkernel
except ImportError:
    _zkernel = None


def bench(fn, blocks, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        for ts, th in blocks:
            fn(ts, th, engine._CHEB, engine._NTERMS)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--blocks", type=int, default=16)
    ap.add_argument("--block-size", type=int, default=2048)
    ap.add_argument("--t-center", type=float, default=9.0e5)
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(1)
    blocks = []
    for i in range(args.blocks):
        base = args.t_center + 100.0 * i
        ts = np.sort(base + rng.uniform(0.0, 64.0, args.block_size))
        blocks.append((ts, engine.theta_block(ts)))
    n_total = args.blocks * args.block_size

    ref = _zkernel_py.rs_z_block(*blocks[0], engine._CHEB, engine._NTERMS)
    t_py = bench(_zkernel_py.rs_z_block, blocks, args.reps)
    print(f"numpy fallback : {t_py:8.4f} s   "
          f"({1e6 * t_py / n_total:.2f} us/node)")

    if _zkernel is None:
        print("compiled kernel: not built (install ran without a compiler)")
        return
    got = _zkernel.rs_z_block(*blocks[0], engine._CHEB, engine._NTERMS)
    agree = float(np.max(np.abs(got - ref)))
    t_c = bench(_zkernel.rs_z_block, blocks, args.reps)
    print(f"compiled       : {t_c:8.4f} s   "
          f"({1e6 * t_c / n_total:.2f} us/node)")
    print(f"speedup        : {t_py / t_c:8.2f} x")
    print(f"max |diff|     : {agree:.3e}   (last-ulp cos differences only)")


if __name__ == "__main__":
    main()
