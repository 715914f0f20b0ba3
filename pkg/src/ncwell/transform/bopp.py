"""Bopp shifts between noncommutative and auxiliary canonical variables.

Two directions are supported:

``NC_TO_AUX``
    x = x' - theta/(2 hbar) p'_y,   y = y' + theta/(2 hbar) p'_x,
    p_x = p'_x + eta/(2 hbar) y',   p_y = p'_y - eta/(2 hbar) x'

``AUX_TO_NC`` (the inverse, with C = 1/(1 - xi), xi = theta eta / 4 hbar^2)
    x' = C (x + theta/(2 hbar) p_y),  y' = C (y - theta/(2 hbar) p_x),
    p'_x = C (p_x - eta/(2 hbar) y),  p'_y = C (p_y + eta/(2 hbar) x)

Restricted modes reuse the same formulas with theta and/or eta set to
zero, so ``SPACE_ONLY`` also has C = 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

from ..algebra.scalar import ScalarCoefficient, sym
from ..algebra.substitution import Substitution
from ..algebra.weyl import AlgebraSpec, WeylElement, aux_algebra, commutator, nc_algebra
from ..errors import AlgebraMismatchError


class Mode(str, enum.Enum):
    FULL = "full"
    SPACE_ONLY = "space-only"
    MOMENTUM_ONLY = "momentum-only"
    COMMUTATIVE = "commutative"


class Direction(str, enum.Enum):
    NC_TO_AUX = "nc-to-aux"
    AUX_TO_NC = "aux-to-nc"


def _param(value, name):
    return sym(name) if value is None else ScalarCoefficient.coerce(value)


@dataclass(frozen=True)
class BoppMap:
    mode: Mode = Mode.FULL
    direction: Direction = Direction.AUX_TO_NC
    theta: ScalarCoefficient = field(default=None)
    eta: ScalarCoefficient = field(default=None)
    hbar: ScalarCoefficient = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "theta", _param(self.theta, "theta"))
        object.__setattr__(self, "eta", _param(self.eta, "eta"))
        object.__setattr__(self, "hbar", _param(self.hbar, "hbar"))

    # ---- effective parameters -----------------------------------------
    @property
    def theta_eff(self) -> ScalarCoefficient:
        if self.mode in (Mode.FULL, Mode.SPACE_ONLY):
            return self.theta
        return ScalarCoefficient.number(0)

    @property
    def eta_eff(self) -> ScalarCoefficient:
        if self.mode in (Mode.FULL, Mode.MOMENTUM_ONLY):
            return self.eta
        return ScalarCoefficient.number(0)

    @property
    def xi(self) -> ScalarCoefficient:
        return self.theta_eff * self.eta_eff / (4 * self.hbar**2)

    @property
    def C(self) -> ScalarCoefficient:
        return 1 / (1 - self.xi)

    # ---- algebras -------------------------------------------------------
    @cached_property
    def nc_side(self) -> AlgebraSpec:
        return nc_algebra(self.theta_eff, self.eta_eff, self.hbar, name=f"NC[{self.mode.value}]")

    @cached_property
    def aux_side(self) -> AlgebraSpec:
        return aux_algebra(self.hbar)

    @property
    def source(self) -> AlgebraSpec:
        return self.nc_side if self.direction is Direction.NC_TO_AUX else self.aux_side

    @property
    def target(self) -> AlgebraSpec:
        return self.aux_side if self.direction is Direction.NC_TO_AUX else self.nc_side

    # ---- the substitution ---------------------------------------------
    @cached_property
    def substitution(self) -> Substitution:
        tgt = self.target
        x, y, px, py = tgt.gens()
        a = self.theta_eff / (2 * self.hbar)
        b = self.eta_eff / (2 * self.hbar)
        if self.direction is Direction.NC_TO_AUX:
            images = {"x": x - py * a, "y": y + px * a, "px": px + y * b, "py": py - x * b}
        else:
            c = self.C
            images = {
                "x": (x + py * a) * c,
                "y": (y - px * a) * c,
                "px": (px - y * b) * c,
                "py": (py + x * b) * c,
            }
        return Substitution.from_mapping(self.source, tgt, images)

    @cached_property
    def induced_source(self) -> AlgebraSpec:
        return self.substitution.induced_algebra(name=f"induced[{self.mode.value}]")

    def inverse(self) -> "BoppMap":
        other = (
            Direction.AUX_TO_NC if self.direction is Direction.NC_TO_AUX else Direction.NC_TO_AUX
        )
        return BoppMap(self.mode, other, self.theta, self.eta, self.hbar)

    def is_homomorphism(self) -> bool:
        """True when the image brackets reproduce the source table exactly."""
        return self.induced_source == self.source

    def __call__(self, e: WeylElement) -> WeylElement:
        return apply_map(self, e)


def apply_map(bmap: BoppMap, e: WeylElement) -> WeylElement:
    """Substitute the generator images of ``bmap`` into ``e``.

    ``e`` must live in the map's source algebra, or in the algebra induced
    by the images (in which the map is a homomorphism; for FULL mode this
    is the source with hbar promoted to hbar_eff).
    """
    if e.algebra != bmap.source and e.algebra != bmap.induced_source:
        raise AlgebraMismatchError(
            f"{bmap.direction.value} map in {bmap.mode.value} mode cannot act on an element of "
            f"{e.algebra.name or 'an unnamed algebra'}",
            "apply_map",
        )
    return bmap.substitution(e, check=False)


def verify_effective_commutator(bmap: BoppMap | None = None) -> WeylElement:
    """[image(x), image(p_x)] computed in the auxiliary algebra."""
    bmap = bmap or BoppMap(Mode.FULL, Direction.NC_TO_AUX)
    if bmap.direction is not Direction.NC_TO_AUX:
        raise AlgebraMismatchError("effective commutator needs the NC->AUX map", "verify_effective_commutator")
    sub = bmap.substitution
    return commutator(sub.image("x"), sub.image("px"))
