"""Difference-based autocovariance estimation for change-point regression."""

from acovdiff._core import (
    DifferenceScheme,
    ErrorModel,
    Innovation,
    StepSignal,
    check_jump_separation,
    estimate_acf,
    estimate_acf_hvk,
    evaluate_mean,
    generate_noise,
    ma_coefficients,
    predict_mean_gamma0,
    predict_var_gamma0,
    quadratic_form,
    quadratic_variation,
    run_experiment,
    scheme_bias_polynomial,
    six_jump_signal,
    total_variation,
    true_acf,
    weighted_jump_functional,
)

__all__ = [
    "DifferenceScheme",
    "ErrorModel",
    "Innovation",
    "StepSignal",
    "check_jump_separation",
    "estimate_acf",
    "estimate_acf_hvk",
    "evaluate_mean",
    "generate_noise",
    "ma_coefficients",
    "predict_mean_gamma0",
    "predict_var_gamma0",
    "quadratic_form",
    "quadratic_variation",
    "run_experiment",
    "scheme_bias_polynomial",
    "six_jump_signal",
    "total_variation",
    "true_acf",
    "weighted_jump_functional",
]
