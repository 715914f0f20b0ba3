"""Closed-form frequencies and energies of the perturbation terms.

All inputs are SI. ``omega`` in the V1 coefficient and in ``eta_from_field``
is the oscillator frequency carried by ``PhysicalParams``.
"""

from __future__ import annotations

import math

from ..errors import DomainError
from .params import PhysicalParams

_RADICAND_HINT = (
    "a negative radicand has no real frequency; this regime needs a minimal-length "
    "or regularized treatment and is not modelled"
)


def v1_coefficient(p: PhysicalParams) -> float:
    """eta/(2 m hbar) - m omega^2 theta/(2 hbar), the printed L_z-term coefficient."""
    return p.eta / (2 * p.m * p.hbar) - p.m * p.omega**2 * p.theta / (2 * p.hbar)


def eta_from_field(p: PhysicalParams) -> float:
    """eta = m^2 omega^2 theta + 2 q B hbar (V1 coefficient set equal to qB/m)."""
    return p.m**2 * p.omega**2 * p.theta + 2 * p.q * p.B * p.hbar


def _root_frequency(radicand: float, m: float, op: str) -> float:
    if radicand < 0:
        raise DomainError(f"radicand {radicand:.6g} < 0: {_RADICAND_HINT}", op)
    return math.sqrt(radicand) / m


def omega_charged(p: PhysicalParams) -> float:
    """sqrt(eta/theta - 2 q B hbar/theta) / m."""
    if p.theta == 0:
        raise DomainError("theta = 0 is a singular configuration for this frequency", "omega_charged")
    radicand = p.eta / p.theta - 2 * p.q * p.B * p.hbar / p.theta
    return _root_frequency(radicand, p.m, "omega_charged")


def omega_neutral(p: PhysicalParams) -> float:
    """sqrt(eta/theta) / m."""
    if p.theta == 0:
        raise DomainError("theta = 0 is a singular configuration for this frequency", "omega_neutral")
    return _root_frequency(p.eta / p.theta, p.m, "omega_neutral")


def energy(p: PhysicalParams, omega: float) -> float:
    return p.hbar * omega


def v2_terms(p: PhysicalParams) -> dict[str, float]:
    """Printed second-order coefficients: p_x^2 and x^2."""
    h2 = p.hbar**2
    return {
        "px2": p.m * p.omega**2 * p.theta**2 / (8 * h2) - p.theta * p.eta / (8 * h2),
        "x2": p.eta**2 / (8 * p.m * h2),
    }


def omega_grav(p: PhysicalParams) -> float:
    """|eta| / (2 m hbar)."""
    return abs(p.eta) / (2 * p.m * p.hbar)


def eta_from_omega(omega: float, p: PhysicalParams) -> float:
    """|eta| = 2 m hbar omega."""
    if omega < 0:
        raise DomainError(f"frequency must be non-negative, got {omega}", "eta_from_omega")
    return 2 * p.m * p.hbar * omega


def grav_energy(p: PhysicalParams) -> float:
    """E_g = hbar omega_grav = |eta| / 2m."""
    return p.hbar * omega_grav(p)
