"""Benchmark the compiled filter-bank kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeats 200]
"""

import argparse
import time

import numpy as np

from wavemod import _fbkernels_py
from wavemod.filterbank import SampleBlock, SubbandFrame, analyze_pyramid, synthesize_pyramid
from wavemod.filters import make_daubechies

try:
    from wavemod import _fbkernels
except ImportError:
    _fbkernels = None


def time_fn(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_steps(repeats):
    rng = np.random.default_rng(0)
    print(f"{'kernel':<28}{'n':>8}{'cython':>12}{'python':>12}{'speedup':>9}")
    for n in (256, 4096, 65536):
        v = rng.standard_normal(n)
        fp = make_daubechies(4)
        c, x = _fbkernels_py.analysis_step(v, fp.h, fp.g)
        rows = [
            ("analysis_step (db2)", lambda k: (lambda: k.analysis_step(v, fp.h, fp.g))),
            ("synthesis_step (db2)", lambda k: (lambda: k.synthesis_step(c, x, fp.h, fp.g))),
        ]
        for name, make in rows:
            t_py = time_fn(make(_fbkernels_py), repeats)
            if _fbkernels is None:
                print(f"{name:<28}{n:>8}{'n/a':>12}{t_py * 1e6:>10.1f}us")
                continue
            t_cy = time_fn(make(_fbkernels), repeats)
            print(
                f"{name:<28}{n:>8}{t_cy * 1e6:>10.1f}us{t_py * 1e6:>10.1f}us"
                f"{t_py / t_cy:>8.1f}x"
            )


def bench_pyramid(repeats):
    rng = np.random.default_rng(1)
    fp = make_daubechies(4)
    num_scales, n0 = 6, 64
    frame = SubbandFrame(
        details=[rng.standard_normal(n0 * 2**m) for m in range(num_scales)],
        coarse=rng.standard_normal(n0),
    )
    block = synthesize_pyramid(frame, fp)
    print(f"\nfull pyramid, M={num_scales}, block length {len(block.samples)}, current backend:")
    t_syn = time_fn(lambda: synthesize_pyramid(frame, fp), repeats)
    t_ana = time_fn(lambda: analyze_pyramid(block, num_scales, fp), repeats)
    print(f"  synthesize: {t_syn * 1e6:.1f}us   analyze: {t_ana * 1e6:.1f}us")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=200)
    args = parser.parse_args()
    if _fbkernels is None:
        print("compiled extension not available; timing fallback only\n")
    bench_steps(args.repeats)
    bench_pyramid(args.repeats)
