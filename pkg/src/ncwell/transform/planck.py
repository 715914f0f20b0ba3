"""Effective Planck constant induced by the NC parameters."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..algebra.scalar import ScalarCoefficient, sym


class PlanckVariant(str, enum.Enum):
    SIMPLE = "simple"
    GENERAL = "general"


@dataclass(frozen=True)
class EffectivePlanck:
    xi: ScalarCoefficient
    hbar_eff: ScalarCoefficient
    variant: PlanckVariant


def effective_planck(
    theta=None, eta=None, m=None, k=None, *, hbar=None, variant="simple"
) -> EffectivePlanck:
    """hbar_eff = hbar (1 + xi).

    simple:  xi = theta eta / 4 hbar^2
    general: xi = m k theta^2 / 8 hbar^2 - eta theta / 4 hbar^2
    """
    variant = PlanckVariant(variant)
    theta = sym("theta") if theta is None else ScalarCoefficient.coerce(theta)
    eta = sym("eta") if eta is None else ScalarCoefficient.coerce(eta)
    hbar = sym("hbar") if hbar is None else ScalarCoefficient.coerce(hbar)
    if variant is PlanckVariant.SIMPLE:
        xi = theta * eta / (4 * hbar**2)
    else:
        m = sym("m") if m is None else ScalarCoefficient.coerce(m)
        k = sym("k") if k is None else ScalarCoefficient.coerce(k)
        xi = m * k * theta**2 / (8 * hbar**2) - eta * theta / (4 * hbar**2)
    return EffectivePlanck(xi=xi, hbar_eff=hbar * (1 + xi), variant=variant)
