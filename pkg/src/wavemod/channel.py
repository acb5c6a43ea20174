"""Seeded AWGN channel.

Each (seed, stream_id) pair names an independent, reproducible noise
stream; calls are order-independent because every call derives a fresh
generator from the pair.
"""

from dataclasses import dataclass

import numpy as np

from wavemod.errors import ConfigurationError
from wavemod.filterbank import SampleBlock


@dataclass(frozen=True)
class NoiseSpec:
    """Per-sample noise standard deviation plus the stream identity."""

    sigma: float
    seed: int
    stream_id: int = 0

    def __post_init__(self):
        if self.sigma < 0:
            raise ConfigurationError(f"sigma must be >= 0, got {self.sigma}")


def noise_rng(spec: NoiseSpec) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([spec.seed, spec.stream_id]))


def add_awgn(block: SampleBlock, spec: NoiseSpec) -> SampleBlock:
    """r = s + sigma * N(0, 1), drawn from the (seed, stream_id) stream."""
    samples = np.asarray(block.samples, dtype=np.float64)
    if spec.sigma == 0.0:
        return SampleBlock(samples=samples.copy(), rate_exponent=block.rate_exponent)
    noise = noise_rng(spec).standard_normal(len(samples))
    return SampleBlock(
        samples=samples + spec.sigma * noise, rate_exponent=block.rate_exponent
    )
