"""Numeric spectra: gravitational well, frequencies, perturbation shifts, oracle."""

from .airy import airy_ai, airy_zero, wkb_level
from .frequencies import (
    energy,
    eta_from_field,
    eta_from_omega,
    grav_energy,
    omega_charged,
    omega_grav,
    omega_neutral,
    v1_coefficient,
    v2_terms,
)
from .levels import (
    Level,
    Method,
    NCBound,
    SpectrumResult,
    energy_scale,
    gravity_well_spectrum,
    nc_bound_from_measurement,
)
from .oscillator import (
    PerturbationReport,
    StateShift,
    diagonalize_oracle,
    numeric_buckets,
    oracle_matrix,
    perturbation_shifts,
)
from .params import EV, HBAR, NEUTRON_MASS, PhysicalParams, particle

__all__ = [
    "EV", "HBAR", "NEUTRON_MASS", "Level", "Method", "NCBound", "PerturbationReport",
    "PhysicalParams", "SpectrumResult", "StateShift", "airy_ai", "airy_zero",
    "diagonalize_oracle", "energy", "energy_scale", "eta_from_field", "eta_from_omega",
    "grav_energy", "gravity_well_spectrum", "nc_bound_from_measurement", "numeric_buckets",
    "omega_charged", "omega_grav", "omega_neutral", "oracle_matrix", "particle",
    "perturbation_shifts", "v1_coefficient", "v2_terms", "wkb_level",
]
