"""Perturbation shifts in the 2D oscillator basis and a dense-matrix oracle.

The oracle represents x, p in each dimension by ladder-operator matrices,
builds the transformed Hamiltonian as a Hermitian matrix and diagonalizes
it with ``numpy.linalg.eigh``. Products are formed in a basis one quantum
larger than requested and then projected, so every matrix element of a
quadratic operator inside the retained block is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..errors import DomainError, IdentityCheckError
from ..hamiltonian.builder import HamiltonianKind, derive
from .frequencies import v1_coefficient, v2_terms
from .levels import Level, Method, SpectrumResult
from .params import PhysicalParams

HERMITICITY_TOL = 1e-12
ROUTES = ("coefficients", "primed")


def ladder(n: int) -> np.ndarray:
    """Annihilation operator a on the first n number states."""
    return np.diag(np.sqrt(np.arange(1, n, dtype=float)), 1)


def position_momentum(n: int, m: float, omega: float, hbar: float) -> tuple[np.ndarray, np.ndarray]:
    a = ladder(n).astype(complex)
    ad = a.conj().T
    x = math.sqrt(hbar / (2 * m * omega)) * (a + ad)
    p = 1j * math.sqrt(m * hbar * omega / 2) * (ad - a)
    return x, p


def _product_ops(n: int, p: PhysicalParams):
    """x, y, px, py on the (n+1)^2 product basis, plus the projector index."""
    x1, p1 = position_momentum(n + 1, p.m, p.omega, p.hbar)
    eye = np.eye(n + 1)
    ops = (np.kron(x1, eye), np.kron(eye, x1), np.kron(p1, eye), np.kron(eye, p1))
    idx = np.array([i * (n + 1) + j for i in range(n) for j in range(n)])
    return ops, idx


@lru_cache(maxsize=None)
def _symbolic_form(mode: str):
    return derive(HamiltonianKind.GRAVITY_OSCILLATOR, mode)


def numeric_buckets(p: PhysicalParams, mode: str = "full") -> dict[str, float]:
    """Bucket coefficients of the transformed gravity-oscillator Hamiltonian at ``p``."""
    form = _symbolic_form(mode)
    values = p.symbol_values()
    return {name: c.evaluate_real(values) for name, c in form.buckets.items()}


def _matrix_from_buckets(p: PhysicalParams, n: int, mode: str) -> np.ndarray:
    b = numeric_buckets(p, mode)
    (x, y, px, py), idx = _product_ops(n, p)
    unit = np.eye(x.shape[0])
    h = (
        b["kinetic_x"] * px @ px
        + b["kinetic_y"] * py @ py
        + b["gravity_linear"] * x
        + b["gravity_momentum"] * py
        + b["angular_momentum"] * (x @ py - y @ px)
        + b["confinement"] * (x @ x + y @ y)
        + b["constant"] * unit
    )
    return h[np.ix_(idx, idx)]


def _primed_images(p: PhysicalParams, mode: str):
    from ..transform.bopp import Mode

    mode = Mode(mode)
    theta = p.theta if mode in (Mode.FULL, Mode.SPACE_ONLY) else 0.0
    eta = p.eta if mode in (Mode.FULL, Mode.MOMENTUM_ONLY) else 0.0
    a = theta / (2 * p.hbar)
    b = eta / (2 * p.hbar)
    c = 1.0 / (1.0 - theta * eta / (4 * p.hbar**2))
    return a, b, c


def _matrix_from_primed(p: PhysicalParams, n: int, mode: str) -> np.ndarray:
    # primed operators expressed through the NC ones, then H built from scratch
    a, b, c = _primed_images(p, mode)
    (x, y, px, py), idx = _product_ops(n, p)
    xp = c * (x + a * py)
    yp = c * (y - a * px)
    pxp = c * (px - b * y)
    pyp = c * (py + b * x)
    h = (pxp @ pxp + pyp @ pyp) / (2 * p.m) + p.m * p.g * xp + 0.5 * p.k * (xp @ xp + yp @ yp)
    return h[np.ix_(idx, idx)]


def oracle_matrix(p: PhysicalParams, basis_size: int, *, route: str = "coefficients", mode: str = "full") -> np.ndarray:
    if p.k <= 0:
        raise DomainError("the oscillator basis needs k > 0", "diagonalize_oracle")
    if isinstance(basis_size, bool) or int(basis_size) != basis_size or basis_size < 4:
        raise DomainError(f"basis_size must be an integer >= 4, got {basis_size!r}", "diagonalize_oracle")
    if route == "coefficients":
        h = _matrix_from_buckets(p, int(basis_size), mode)
    elif route == "primed":
        h = _matrix_from_primed(p, int(basis_size), mode)
    else:
        raise DomainError(f"unknown oracle route {route!r}; expected one of {ROUTES}", "diagonalize_oracle")
    scale = max(np.abs(h).max(), np.finfo(float).tiny)
    asym = np.abs(h - h.conj().T).max() / scale
    if asym > HERMITICITY_TOL:
        raise IdentityCheckError(f"oracle matrix not Hermitian (relative defect {asym:.3e})", "diagonalize_oracle")
    return 0.5 * (h + h.conj().T)


def diagonalize_oracle(
    p: PhysicalParams,
    basis_size: int,
    *,
    n_levels: int | None = None,
    route: str = "coefficients",
    mode: str = "full",
) -> SpectrumResult:
    """Lowest eigenvalues of the transformed Hamiltonian on a basis_size^2 product basis."""
    h = oracle_matrix(p, basis_size, route=route, mode=mode)
    evals = np.linalg.eigvalsh(h)
    if n_levels is not None:
        evals = evals[: int(n_levels)]
    levels = tuple(Level((i,), float(e)) for i, e in enumerate(evals))
    return SpectrumResult(levels, Method.DIAGONALIZATION, int(basis_size), {"route": route, "mode": mode})


def validate_state(n, m_l) -> tuple[int, int]:
    ok = all(isinstance(v, (int, np.integer)) and not isinstance(v, bool) for v in (n, m_l))
    if not ok or n < 0 or abs(m_l) > n or (n - abs(m_l)) % 2:
        raise DomainError(
            f"({n!r}, {m_l!r}) is not a 2D oscillator circular state (n >= 0, |m_l| <= n, n - |m_l| even)",
            "perturbation_shifts",
        )
    return int(n), int(m_l)


@dataclass(frozen=True)
class StateShift:
    n: int
    m_l: int
    unperturbed: float
    lz_shift: float
    v1_printed_shift: float
    v1_hermitian_shift: float
    v2_printed_shift: float
    v2_derived_shift: float
    gravity_shift: float
    constant_shift: float
    oracle_energy: float | None = None

    @property
    def first_order_energy(self) -> float:
        return self.unperturbed + self.lz_shift

    @property
    def predicted_energy(self) -> float:
        return (
            self.unperturbed + self.lz_shift + self.v2_derived_shift
            + self.gravity_shift + self.constant_shift
        )

    @property
    def oracle_delta_lz(self) -> float | None:
        """oracle - (E0 + first-order L_z shift)."""
        if self.oracle_energy is None:
            return None
        return self.oracle_energy - self.first_order_energy

    @property
    def oracle_delta(self) -> float | None:
        """oracle - full first-order prediction."""
        if self.oracle_energy is None:
            return None
        return self.oracle_energy - self.predicted_energy

    def as_row(self) -> dict:
        return {
            "n": self.n,
            "m_l": self.m_l,
            "unperturbed_J": self.unperturbed,
            "lz_shift_J": self.lz_shift,
            "v1_printed_shift_J": self.v1_printed_shift,
            "v1_hermitian_shift_J": self.v1_hermitian_shift,
            "v2_printed_shift_J": self.v2_printed_shift,
            "v2_derived_shift_J": self.v2_derived_shift,
            "gravity_shift_J": self.gravity_shift,
            "constant_shift_J": self.constant_shift,
            "predicted_J": self.predicted_energy,
            "oracle_J": self.oracle_energy,
            "oracle_delta_lz_J": self.oracle_delta_lz,
            "oracle_delta_J": self.oracle_delta,
        }


@dataclass(frozen=True)
class PerturbationReport:
    V1_coefficient: float
    lz_coefficient: float
    V2_coefficients: dict
    V2_derived_coefficients: dict
    coupling_ratio: float
    states: tuple
    basis_size: int | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {
            "V1_coefficient": self.V1_coefficient,
            "lz_coefficient": self.lz_coefficient,
            "V2_coefficients": dict(self.V2_coefficients),
            "V2_derived_coefficients": dict(self.V2_derived_coefficients),
            "coupling_ratio": self.coupling_ratio,
            "basis_size": self.basis_size,
            "states": [s.as_row() for s in self.states],
        }

    def to_spectrum(self) -> SpectrumResult:
        return SpectrumResult(
            tuple(Level((s.n, s.m_l), s.predicted_energy) for s in self.states),
            Method.PERTURBATION,
        )


def perturbation_shifts(
    p: PhysicalParams,
    states,
    *,
    basis_size: int | None = 16,
    mode: str = "full",
) -> PerturbationReport:
    """First-order shifts of circular oscillator states under the transformed Hamiltonian.

    The unperturbed problem is p^2/2m + k r^2/2 + m g x. Every difference
    between the transformed buckets and that problem is treated to first
    order; the L_z part is diagonal in the circular basis, so its shift is
    E hbar m_l. With ``basis_size`` set, each state is matched to the
    nearest oracle eigenvalue.
    """
    if p.k <= 0:
        raise DomainError("perturbation shifts need an oscillator (k > 0)", "perturbation_shifts")
    states = [validate_state(n, m_l) for n, m_l in states]
    b = numeric_buckets(p, mode)
    m, w, hbar = p.m, p.omega, p.hbar
    d_kin = b["kinetic_x"] - 1 / (2 * m)
    d_conf = b["confinement"] - p.k / 2
    d_grav = b["gravity_linear"] - m * p.g
    e_lz = b["angular_momentum"]
    v1 = v1_coefficient(p)
    v2 = v2_terms(p)
    x0 = p.g / w**2  # the unperturbed well is centred at x = -x0
    e_static = -m * p.g**2 / (2 * w**2)

    evals = None
    if basis_size is not None:
        evals = np.linalg.eigvalsh(oracle_matrix(p, basis_size, mode=mode))

    out = []
    for n, m_l in states:
        x2 = hbar * (n + 1) / (2 * m * w)  # <x^2> = <y^2> about the centre
        p2 = m * hbar * w * (n + 1) / 2    # <px^2> = <py^2>
        shift = StateShift(
            n=n,
            m_l=m_l,
            unperturbed=hbar * w * (n + 1) + e_static,
            lz_shift=e_lz * hbar * m_l,
            v1_printed_shift=v1 * hbar * m_l / 2,  # <x p_y> = hbar m_l / 2
            v1_hermitian_shift=v1 * hbar * m_l,
            v2_printed_shift=v2["px2"] * p2 + v2["x2"] * (x2 + x0**2),
            v2_derived_shift=2 * d_kin * p2 + d_conf * (2 * x2 + x0**2),
            gravity_shift=-d_grav * x0,
            constant_shift=b["constant"],
        )
        if evals is not None:
            target = shift.predicted_energy
            nearest = float(evals[int(np.argmin(np.abs(evals - target)))])
            shift = StateShift(**{**shift.__dict__, "oracle_energy": nearest})
        out.append(shift)

    return PerturbationReport(
        V1_coefficient=v1,
        lz_coefficient=e_lz,
        V2_coefficients=v2,
        V2_derived_coefficients={"kinetic_delta": d_kin, "confinement_delta": d_conf},
        coupling_ratio=abs(e_lz) / w,
        states=tuple(out),
        basis_size=basis_size,
    )
