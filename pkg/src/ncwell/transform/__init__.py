"""Bopp-shift maps, effective Planck constant and NC-order series."""

from .bopp import BoppMap, Direction, Mode, apply_map, verify_effective_commutator
from .planck import EffectivePlanck, PlanckVariant, effective_planck
from .series import NCSeries, expand_C_series, nc_order_range, truncate_nc_order

__all__ = [
    "BoppMap", "Direction", "EffectivePlanck", "Mode", "NCSeries", "PlanckVariant",
    "apply_map", "effective_planck", "expand_C_series", "nc_order_range",
    "truncate_nc_order", "verify_effective_commutator",
]
