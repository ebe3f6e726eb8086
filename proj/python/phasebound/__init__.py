"""Quantum limits on interferometric phase detection via binary decision theory."""

from phasebound._core import (
    BetaScanResult,
    DegenerateRegimeError,
    FockDistribution,
    Moments,
    NotDetectableError,
    PhiMinResult,
    ROCPoint,
    ScalingFit,
    SimResult,
    TruncationCapError,
    build_distribution,
    coherent_distribution,
    corrected_fluctuation_bound,
    default_lambda_grid,
    detection_probability,
    distribution_from_spec,
    eigen_oracle_point,
    fit_power_law,
    fluctuation_bound,
    kappa_threshold,
    min_detectable_phase,
    moments,
    optimal_squeezing_fraction,
    overlap_kappa,
    phase_coherent_bound,
    phase_coherent_distribution,
    quadratic_overlap,
    roc_analytic,
    roc_from_oracle,
    shot_noise_bound,
    simulate_strategy,
    squeezed_bound,
    squeezed_distribution,
    truncated_london_distribution,
)

__all__ = [name for name in dir() if not name.startswith("_")]
