"""Wavelet (fractal) modulation modem simulator.

Modulates binary messages into multiple dyadic frequency scales through an
inverse Mallat filter bank, detects them after an AWGN channel with
maximum-likelihood diversity combining, and verifies measured bit-error
rates against closed-form predictions.
"""

from wavemod.errors import ConfigurationError, ShapeError
from wavemod.filters import FilterPair, make_daubechies, validate_filter_pair
from wavemod.filterbank import (
    BACKEND,
    SampleBlock,
    SubbandFrame,
    analysis_step,
    analyze_pyramid,
    synthesis_step,
    synthesize_pyramid,
)
from wavemod.codec import (
    METHOD1,
    METHOD2,
    MessageBlock,
    PlacementSpec,
    gather_observations,
    place_method1,
    place_method2,
)
from wavemod.channel import NoiseSpec, add_awgn
from wavemod.detector import Decision, ObservationSet, detect_block, ml_decide
from wavemod.ber import (
    BerPoint,
    ExperimentConfig,
    ber_method1_exact,
    ber_method1_ideal,
    ber_method2,
    ber_pam,
    q_function,
    run_monte_carlo,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BerPoint",
    "ConfigurationError",
    "Decision",
    "ExperimentConfig",
    "FilterPair",
    "METHOD1",
    "METHOD2",
    "MessageBlock",
    "NoiseSpec",
    "ObservationSet",
    "PlacementSpec",
    "SampleBlock",
    "ShapeError",
    "SubbandFrame",
    "add_awgn",
    "analysis_step",
    "analyze_pyramid",
    "ber_method1_exact",
    "ber_method1_ideal",
    "ber_method2",
    "ber_pam",
    "detect_block",
    "gather_observations",
    "make_daubechies",
    "ml_decide",
    "place_method1",
    "place_method2",
    "q_function",
    "run_monte_carlo",
    "synthesis_step",
    "synthesize_pyramid",
    "validate_filter_pair",
]
