"""Simulation lab for learning quantum processes from statistical queries."""

from .paulis import Observable, PauliString, enumerate_low_degree, validate_few_body
from .states import (
    DensityMatrix,
    SampledState,
    StabilizerProductState,
    StateDistribution,
    density_of,
    expectation,
    sample_state,
    stab_expectation,
    trace_distance,
)
from .channels import (
    DepolarizingChannel,
    NoisyUnitaryChannel,
    PauliSpikeChannel,
    UnitaryChannel,
    apply,
    channel_from_config,
    exact_pauli_coefficient,
    heisenberg_adjoint,
)
from .ensembles import haar_unitary, uniform_clifford
from .oracle import (
    ExactMode,
    GaussianMode,
    QPStatOracle,
    ShadowMode,
    chebyshev_shots,
    oracle_mode_from_config,
)
from .learner import (
    Hyperparams,
    Hypothesis,
    TrainingSet,
    derive_hyperparams,
    estimate_coefficients,
    evaluate_rms,
    fit,
    gather_data,
    predict,
    raw_coefficients,
)
from . import bounds, crqpuf

__version__ = "0.1.0"
