"""Fejer-type trigonometric sums: evaluation, spikes, and a positivity certificate."""

from ._validation import (
    BracketError,
    ConsistencyError,
    CounterexampleError,
    DomainError,
    UnsupportedCombinationError,
)
from .bessel import (
    XI,
    BesselCoefficient,
    ExpansionSplit,
    SpikeLocation,
    TailBound,
    bessel_unit,
    expansion_cos_spike_coefficients,
    partial_expansion_cos,
    partial_expansion_sin,
    tail_bound,
)
from .certify import (
    CertificateStage,
    PositivityCertificate,
    RootPair,
    build_certificate,
    gibbs_constant,
    lambda_crossing,
    solve_roots,
    verify_lemma1,
    verify_lemma2_bound,
    verify_lemma3,
)
from .series import (
    EULER_GAMMA,
    Endpoint,
    EndpointExpansion,
    HarmonicValue,
    Parity,
    SpecialPoint,
    SumKind,
    cosine_sum,
    digamma,
    endpoint_derivative,
    endpoint_expansion,
    evaluate,
    harmonic,
    modified_sum,
    partial_sums,
    sine_sum,
    special_value,
)
from .spikes import (
    JumpMeasurement,
    SpikeEstimate,
    growth_fit,
    jump_prediction,
    measure_jump,
    spike_height,
    spike_location_small_even,
)

__version__ = "0.1.0"
