"""Gravitational-well levels and the NC bound they imply."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..errors import DomainError
from ..transform.planck import PlanckVariant
from .airy import airy_zero, wkb_level
from .params import EV, HBAR, PhysicalParams


class Method(str, enum.Enum):
    AIRY_EXACT = "AiryExact"
    WKB = "WKB"
    DIAGONALIZATION = "Diagonalization"
    PERTURBATION = "Perturbation"


@dataclass(frozen=True)
class Level:
    quantum_numbers: tuple
    energy_J: float

    @property
    def energy_eV(self) -> float:
        return self.energy_J / EV


@dataclass(frozen=True)
class SpectrumResult:
    levels: tuple
    method: Method
    basis_size: int | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def energies(self) -> list[float]:
        return [lv.energy_J for lv in self.levels]


def energy_scale(p: PhysicalParams, hbar: float | None = None) -> float:
    """(hbar^2 m g^2 / 2)^(1/3)."""
    h = p.hbar if hbar is None else hbar
    return (h * h * p.m * p.g * p.g / 2.0) ** (1.0 / 3.0)


def gravity_well_spectrum(
    p: PhysicalParams, n_max: int, *, method="AiryExact", hbar: float | None = None
) -> SpectrumResult:
    """E_n = (hbar^2 m g^2/2)^(1/3) alpha_n for n = 1..n_max.

    ``hbar`` overrides ``p.hbar`` (pass hbar_eff for the NC-shifted levels).
    """
    method = Method(method)
    if p.g <= 0:
        raise DomainError("g = 0: the gravitational well has no bound states", "gravity_well_spectrum")
    if isinstance(n_max, bool) or int(n_max) != n_max or n_max < 1:
        raise DomainError(f"n_max must be a positive integer, got {n_max!r}", "gravity_well_spectrum")
    if hbar is not None and hbar <= 0:
        raise DomainError(f"hbar must be positive, got {hbar}", "gravity_well_spectrum")
    if method is Method.AIRY_EXACT:
        zero = airy_zero
    elif method is Method.WKB:
        zero = wkb_level
    else:
        raise DomainError(f"{method.value} is not a closed-form well method", "gravity_well_spectrum")
    scale = energy_scale(p, hbar)
    levels = tuple(Level((n,), scale * zero(n)) for n in range(1, int(n_max) + 1))
    return SpectrumResult(levels, method)


@dataclass(frozen=True)
class NCBound:
    delta: float
    variant: PlanckVariant
    xi_bound: float
    theta_eta_bound: float | None

    def as_dict(self) -> dict:
        return {
            "delta_E_over_E": self.delta,
            "variant": self.variant.value,
            "xi_bound": self.xi_bound,
            "theta_eta_bound": self.theta_eta_bound,
        }


def nc_bound_from_measurement(delta: float, variant="simple", *, hbar: float | None = None) -> NCBound:
    """Bound on |xi| from a fractional level agreement ``delta``.

    E_n scales as hbar^(2/3), so (1+xi)^(2/3) - 1 ~ (2/3) xi and |xi| <= 3 delta/2.
    The simple variant also bounds |theta eta| = 4 hbar^2 |xi|.
    """
    variant = PlanckVariant(variant)
    if not delta > 0:
        raise DomainError(f"fractional agreement must be positive, got {delta!r}", "nc_bound_from_measurement")
    h = HBAR if hbar is None else hbar
    if h <= 0:
        raise DomainError(f"hbar must be positive, got {h}", "nc_bound_from_measurement")
    xi = 1.5 * delta
    te = 4.0 * h * h * xi if variant is PlanckVariant.SIMPLE else None
    return NCBound(delta, variant, xi, te)
