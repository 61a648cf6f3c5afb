"""Polar codes with coupled local/global belief-propagation decoding."""

from ._backend import BACKEND
from .bp import (
    LLR_MAX,
    DecodeOutcome,
    MessageGrid,
    bp_decode,
    bp_iterate,
    box_plus,
    g_matrix_check,
    init_grid,
)
from .channel import awgn_llr, noise_variance
from .code import (
    CodeConfig,
    construct_reliability,
    generator_matrix,
    initial_bhattacharyya,
    partition_channels,
    polar_transform,
)
from .coupled import (
    CoupledConfig,
    CouplingError,
    InterleaverMap,
    RateReport,
    build_coupled_config,
    build_interleaver,
    global_decode,
    lg_encode,
    local_decode,
    validate_config,
)
from .oracle import ml_oracle_decode
from .simulate import Scenario, SimResult, emit_csv, run_point, run_scenario
from .systematic import (
    SystematicCodeword,
    systematic_encode,
    systematic_extract,
    systematic_positions,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LLR_MAX",
    "CodeConfig",
    "CoupledConfig",
    "CouplingError",
    "DecodeOutcome",
    "InterleaverMap",
    "MessageGrid",
    "RateReport",
    "Scenario",
    "SimResult",
    "SystematicCodeword",
    "awgn_llr",
    "box_plus",
    "bp_decode",
    "bp_iterate",
    "build_coupled_config",
    "build_interleaver",
    "construct_reliability",
    "emit_csv",
    "g_matrix_check",
    "generator_matrix",
    "global_decode",
    "init_grid",
    "initial_bhattacharyya",
    "lg_encode",
    "local_decode",
    "ml_oracle_decode",
    "noise_variance",
    "partition_channels",
    "polar_transform",
    "run_point",
    "run_scenario",
    "systematic_encode",
    "systematic_extract",
    "systematic_positions",
    "validate_config",
    "__version__",
]
