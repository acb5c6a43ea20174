"""The Mallat pyramid: single-step and multi-level analysis and synthesis.

Circular (periodic) convolution keeps every length an exact power-of-two
multiple and makes the round trip exact for orthonormal filters. Scale
indices are relative: the coarsest detail level is 0, the finest is M-1.

The hot single-level kernels live in a compiled extension with a
pure-numpy fallback; set WAVEMOD_NO_EXT=1 to force the fallback.
"""

import os
from dataclasses import dataclass, field

import numpy as np

from wavemod.errors import ShapeError
from wavemod.filters import FilterPair

if os.environ.get("WAVEMOD_NO_EXT"):
    from wavemod import _fbkernels_py as _kernels

    BACKEND = "python"
else:
    try:
        from wavemod import _fbkernels as _kernels

        BACKEND = "cython"
    except ImportError:
        from wavemod import _fbkernels_py as _kernels

        BACKEND = "python"


@dataclass(frozen=True)
class SampleBlock:
    """Real time-domain samples at semantic rate 2**rate_exponent."""

    samples: np.ndarray
    rate_exponent: int = 0


@dataclass(frozen=True)
class SubbandFrame:
    """Per-scale detail sequences plus the coarse branch.

    details[m] has length n0 * 2**m for m in 0..num_scales-1; coarse has
    length n0. In modulation use the coarse branch is all zeros.
    """

    details: list = field(default_factory=list)
    coarse: np.ndarray = None

    def __post_init__(self):
        n0 = len(self.coarse)
        for m, d in enumerate(self.details):
            if len(d) != n0 * 2**m:
                raise ShapeError(
                    f"detail level {m} has length {len(d)}, expected {n0 * 2**m}"
                )

    @property
    def n0(self) -> int:
        return len(self.coarse)

    @property
    def num_scales(self) -> int:
        return len(self.details)


def _as_float_array(seq) -> np.ndarray:
    return np.ascontiguousarray(seq, dtype=np.float64)


def analysis_step(c_next, fp: FilterPair):
    """One pyramid level down: circular filter by h and g, decimate by 2.

    c(n) = sum_m h(m - 2n) c_next(m mod N), likewise x with g.
    Returns (c, x), each of length N/2.
    """
    c_next = _as_float_array(c_next)
    if len(c_next) % 2 != 0:
        raise ShapeError(f"analysis input length {len(c_next)} is odd")
    return _kernels.analysis_step(c_next, fp.h, fp.g)


def synthesis_step(c, x, fp: FilterPair):
    """One pyramid level up: upsample, filter, sum the two branches.

    c_next(m) = sum_n h(m - 2n) c(n) + sum_n g(m - 2n) x(n), indices
    modulo 2*len(c). Exact inverse of analysis_step for orthonormal fp.
    """
    c = _as_float_array(c)
    x = _as_float_array(x)
    if len(c) != len(x):
        raise ShapeError(f"coarse/detail length mismatch: {len(c)} vs {len(x)}")
    return _kernels.synthesis_step(c, x, fp.h, fp.g)


def synthesize_pyramid(frame: SubbandFrame, fp: FilterPair) -> SampleBlock:
    """Run the inverse pyramid: coarse branch up through every detail level."""
    c = _as_float_array(frame.coarse)
    for m in range(frame.num_scales):
        c = synthesis_step(c, frame.details[m], fp)
    return SampleBlock(samples=c, rate_exponent=frame.num_scales)


def analyze_pyramid(block: SampleBlock, num_scales: int, fp: FilterPair) -> SubbandFrame:
    """Run the forward pyramid, peeling one detail sequence per level."""
    c = _as_float_array(block.samples)
    if len(c) % 2**num_scales != 0:
        raise ShapeError(
            f"block length {len(c)} not divisible by 2^{num_scales}"
        )
    details = [None] * num_scales
    for m in reversed(range(num_scales)):
        c, x = analysis_step(c, fp)
        details[m] = x
    return SubbandFrame(details=details, coarse=c)
