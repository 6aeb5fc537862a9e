"""Aging-channel massive MIMO vehicular uplink simulator."""

from ._vaging import (
    ConfigError,
    NumericError,
    acf,
    ase_curve,
    coherence_block,
    find_copt,
    fit_copt_model,
    i0_of_sqrt,
    j0,
    scf,
    sigma_to_kappa,
    spatial_matrix,
    thermal_noise_variance,
)

__all__ = [
    "ConfigError",
    "NumericError",
    "acf",
    "ase_curve",
    "coherence_block",
    "find_copt",
    "fit_copt_model",
    "i0_of_sqrt",
    "j0",
    "scf",
    "sigma_to_kappa",
    "spatial_matrix",
    "thermal_noise_variance",
]
