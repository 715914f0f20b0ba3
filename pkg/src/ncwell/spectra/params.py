"""Physical parameter bundle (SI units) shared by the numeric layer."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

from scipy import constants as _sc

from ..errors import ConfigError

HBAR = _sc.hbar
EV = _sc.electron_volt  # 1.602176634e-19 J, exact since the 2019 SI
NEUTRON_MASS = _sc.m_n
STANDARD_GRAVITY = 9.81


@dataclass(frozen=True)
class PhysicalParams:
    """Numeric inputs. ``k`` and ``omega`` are tied by k = m omega^2; give either."""

    m: float
    g: float = 0.0
    hbar: float = HBAR
    theta: float = 0.0
    eta: float = 0.0
    k: float | None = None
    omega: float | None = None
    q: float = 0.0
    B: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ConfigError(f"{f.name} must be a real number, got {v!r}", "PhysicalParams")
            if not math.isfinite(v):
                raise ConfigError(f"{f.name} must be finite, got {v!r}", "PhysicalParams")
        if self.m <= 0:
            raise ConfigError(f"mass must be positive, got {self.m}", "PhysicalParams")
        if self.hbar <= 0:
            raise ConfigError(f"hbar must be positive, got {self.hbar}", "PhysicalParams")
        if self.g < 0:
            raise ConfigError(f"g must be non-negative, got {self.g}", "PhysicalParams")
        k, omega = self.k, self.omega
        if k is not None and k < 0:
            raise ConfigError(f"k must be non-negative, got {k}", "PhysicalParams")
        if omega is not None and omega < 0:
            raise ConfigError(f"omega must be non-negative, got {omega}", "PhysicalParams")
        if k is None and omega is None:
            k = omega = 0.0
        elif k is None:
            k = self.m * omega**2
        elif omega is None:
            omega = math.sqrt(k / self.m)
        elif not math.isclose(k, self.m * omega**2, rel_tol=1e-9, abs_tol=0.0):
            raise ConfigError(
                f"k = {k} and omega = {omega} violate k = m omega^2", "PhysicalParams"
            )
        object.__setattr__(self, "k", float(k))
        object.__setattr__(self, "omega", float(omega))

    def with_(self, **changes) -> "PhysicalParams":
        # changing one of k/omega must drop the other so they are re-linked
        if "k" in changes and "omega" not in changes:
            changes["omega"] = None
        if "omega" in changes and "k" not in changes:
            changes["k"] = None
        if "m" in changes and "k" not in changes and "omega" not in changes:
            changes["omega"] = None  # the spring constant stays fixed
        return replace(self, **changes)

    def symbol_values(self) -> dict[str, float]:
        """Values keyed by registered symbol name, for coefficient evaluation."""
        return {
            "m": self.m, "g": self.g, "hbar": self.hbar, "theta": self.theta,
            "eta": self.eta, "k": self.k, "omega": self.omega, "q": self.q, "B": self.B,
        }

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


PARTICLES = {
    "neutron": {"m": NEUTRON_MASS, "g": STANDARD_GRAVITY},
}


def particle(name: str, **overrides) -> PhysicalParams:
    try:
        base = dict(PARTICLES[name])
    except KeyError:
        raise ConfigError(f"unknown particle {name!r}; known: {sorted(PARTICLES)}", "particle") from None
    base.update(overrides)
    return PhysicalParams(**base)
