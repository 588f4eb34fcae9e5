"""Scattering probabilities for a giant Lambda-type atom coupled to a waveguide at two points."""

from ._core import (
    ModelParams,
    ScatteringAmplitudes,
    SagnacAmplitudes,
    SingularPointError,
    analyze,
    effective_params,
    giant_lambda_amplitudes,
    sagnac_amplitudes,
    solve_giant,
    sweep,
    __version__,
)

__all__ = [
    "ModelParams",
    "ScatteringAmplitudes",
    "SagnacAmplitudes",
    "SingularPointError",
    "analyze",
    "effective_params",
    "giant_lambda_amplitudes",
    "sagnac_amplitudes",
    "solve_giant",
    "sweep",
    "__version__",
]
