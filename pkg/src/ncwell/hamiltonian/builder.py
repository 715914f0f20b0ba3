"""Hamiltonians of the gravitational well, pushed through Bopp maps.

Pipeline::

    h = build_hamiltonian("gravity")                 # primed (AUX) variables
    form = transform_hamiltonian(h, BoppMap("full"))  # NC variables, bucketed
    shifted = momentum_shift(form, "eq10")            # absorb the p_y term
    gravity_collapse_check(shifted)                   # == m*g exactly
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Mapping

from ..algebra.scalar import ScalarCoefficient, sym
from ..algebra.substitution import Substitution
from ..algebra.weyl import AUX, UNIT, AlgebraSpec, WeylElement
from ..errors import AlgebraMismatchError, IdentityCheckError, StructuralError
from ..transform.bopp import BoppMap, Direction, Mode


class HamiltonianKind(str, enum.Enum):
    GRAVITY_WELL = "gravity"
    FREE_OSCILLATOR = "oscillator"
    GRAVITY_OSCILLATOR = "gravity-oscillator"


BUCKETS = (
    "kinetic_x",
    "kinetic_y",
    "gravity_linear",
    "gravity_momentum",
    "angular_momentum",
    "confinement",
    "constant",
)

_PX2 = (0, 0, 2, 0)
_PY2 = (0, 0, 0, 2)
_X = (1, 0, 0, 0)
_PY = (0, 0, 0, 1)
_XPY = (1, 0, 0, 1)
_YPX = (0, 1, 1, 0)
_X2 = (2, 0, 0, 0)
_Y2 = (0, 2, 0, 0)


def build_hamiltonian(kind, algebra: AlgebraSpec = AUX) -> WeylElement:
    """The Hamiltonian in primed (auxiliary canonical) variables.

    gravity:            (px^2 + py^2)/2m + m g x
    oscillator:         (px^2 + py^2)/2m + k/2 (x^2 + y^2)
    gravity-oscillator: gravity + k/2 (x^2 + y^2)
    """
    kind = HamiltonianKind(kind)
    m, g, k = sym("m"), sym("g"), sym("k")
    x, y, px, py = algebra.gens()
    h = (px * px + py * py) / (2 * m)
    if kind in (HamiltonianKind.GRAVITY_WELL, HamiltonianKind.GRAVITY_OSCILLATOR):
        h = h + x * (m * g)
    if kind in (HamiltonianKind.FREE_OSCILLATOR, HamiltonianKind.GRAVITY_OSCILLATOR):
        h = h + (x * x + y * y) * (k / 2)
    return h


@dataclass(frozen=True)
class MomentumShift:
    """p_x = pbar_x / s,  p_y = (pbar_y - offset) / s.

    ``s`` is either an exact coefficient or the registered symbol ``A``
    standing for a square root; in the latter case ``square`` holds
    ``A**2`` and results are reduced with it.
    """

    kind: str
    scale: ScalarCoefficient
    offset: ScalarCoefficient
    square: ScalarCoefficient | None = None
    root_symbol: str | None = None

    @property
    def inverse_scale(self) -> ScalarCoefficient:
        if self.square is None:
            return 1 / self.scale
        return self.scale / self.square

    def reduce(self, c: ScalarCoefficient) -> ScalarCoefficient:
        if self.square is None:
            return c
        return reduce_square(c, self.root_symbol, self.square)

    def shifted_algebra(self, base: AlgebraSpec) -> AlgebraSpec:
        s = self.scale
        scale = (1, 1, s, s)
        brackets = {}
        for (i, j), v in base.table:
            brackets[(i, j)] = self.reduce(v * scale[i] * scale[j])
        return AlgebraSpec.from_brackets(
            brackets,
            name=f"{base.name}+{self.kind}",
            kind="shifted",
            labels=("x", "y", "pbar_x", "pbar_y"),
        )


def reduce_square(c: ScalarCoefficient, name: str, square: ScalarCoefficient) -> ScalarCoefficient:
    """Rewrite even powers of symbol ``name`` in the numerator as powers of ``square``."""
    c = c._lift()
    names = [str(s) for s in c.ring.symbols]
    idx = names.index(name)
    for mono in c.den.keys():
        if mono[idx]:
            raise StructuralError(f"symbol {name} appears in a denominator")
    ring = c.ring
    root = sym(name)
    total = ScalarCoefficient.number(0)
    for poly, unit in ((c.re, 1), (c.im, ScalarCoefficient.number(0, 1))):
        for mono, coeff in poly.items():
            e = mono[idx]
            rest = list(mono)
            rest[idx] = 0
            term = ScalarCoefficient(ring({tuple(rest): coeff}))
            if e >= 2:
                term = term * square ** (e // 2)
            if e % 2:
                term = term * root
            total = total + term * unit
    return total / ScalarCoefficient(c.den)


@dataclass(frozen=True)
class HamiltonianForm:
    raw: WeylElement
    buckets: Mapping[str, ScalarCoefficient]
    residual: WeylElement
    source_map: BoppMap | None = None
    shift: MomentumShift | None = None
    kind: HamiltonianKind | None = None
    unshifted: "HamiltonianForm | None" = field(default=None, repr=False, compare=False)

    def __getitem__(self, name: str) -> ScalarCoefficient:
        return self.buckets[name]

    @property
    def algebra(self) -> AlgebraSpec:
        return self.raw.algebra

    def reconstruct(self) -> WeylElement:
        return assemble(self.algebra, self.buckets) + self.residual

    def subs(self, values: dict) -> "HamiltonianForm":
        return collect(self.raw.subs(values), source_map=self.source_map, shift=self.shift, kind=self.kind)


def assemble(algebra: AlgebraSpec, buckets: Mapping[str, ScalarCoefficient]) -> WeylElement:
    zero = ScalarCoefficient.number(0)
    b = {name: buckets.get(name, zero) for name in BUCKETS}
    ang = b["angular_momentum"]
    conf = b["confinement"]
    terms = {
        _PX2: b["kinetic_x"],
        _PY2: b["kinetic_y"],
        _X: b["gravity_linear"],
        _PY: b["gravity_momentum"],
        _XPY: ang,
        _YPX: -ang,
        _X2: conf,
        _Y2: conf,
        UNIT: b["constant"],
    }
    return WeylElement(algebra, terms)


def collect(e: WeylElement, *, source_map=None, shift=None, kind=None) -> HamiltonianForm:
    """Sort the terms of ``e`` into the named physical buckets."""
    buckets = {
        "kinetic_x": e.coefficient(_PX2),
        "kinetic_y": e.coefficient(_PY2),
        "gravity_linear": e.coefficient(_X),
        "gravity_momentum": e.coefficient(_PY),
        "angular_momentum": e.coefficient(_XPY),
        "confinement": e.coefficient(_X2),
        "constant": e.coefficient(UNIT),
    }
    residual = e - assemble(e.algebra, buckets)
    return HamiltonianForm(e, buckets, residual, source_map, shift, kind)


def transform_hamiltonian(h: WeylElement, bmap: BoppMap, *, strict: bool = True, kind=None) -> HamiltonianForm:
    """Rewrite a primed Hamiltonian in NC variables and bucket the result.

    With ``strict`` (default) any term outside the buckets raises
    :class:`StructuralError`.
    """
    if bmap.direction is not Direction.AUX_TO_NC:
        raise AlgebraMismatchError(
            "Hamiltonians are transformed with the AUX->NC map", "transform_hamiltonian"
        )
    from ..transform.bopp import apply_map

    form = collect(apply_map(bmap, h), source_map=bmap, kind=kind)
    if strict and not form.residual.is_zero():
        raise StructuralError(
            f"transform produced unexpected terms: {form.residual}", "transform_hamiltonian"
        )
    return form


def derive(kind, mode="full") -> HamiltonianForm:
    """build -> transform for a named Hamiltonian and map mode."""
    kind = HamiltonianKind(kind)
    return transform_hamiltonian(build_hamiltonian(kind), BoppMap(Mode(mode)), kind=kind)


def momentum_shift(hf: HamiltonianForm, kind: str = "eq10") -> HamiltonianForm:
    """Absorb the linear p_y term into shifted momenta.

    ``eq10``: pbar = C p (requires kinetic coefficients C^2/2m), the
    offset of pbar_y is m * (p_y coefficient) / C.

    ``eq17``: pbar = A p with A^2 = 2 m * kinetic, kept as the symbol A;
    the offset is m * (p_y coefficient) / A.

    The constant generated by completing the square lands in the
    ``constant`` bucket.
    """
    if hf.shift is not None:
        raise StructuralError("form is already shifted", "momentum_shift")
    m = sym("m")
    kx, ky = hf["kinetic_x"], hf["kinetic_y"]
    if kx != ky:
        raise StructuralError("momentum shift needs equal kinetic coefficients", "momentum_shift")
    kind = kind.lower()
    if kind == "eq10":
        scale = hf.source_map.C if hf.source_map is not None else ScalarCoefficient.number(1)
        if scale**2 / (2 * m) != kx:
            raise StructuralError(
                f"eq10 shift needs kinetic coefficient C^2/2m, found {kx}", "momentum_shift"
            )
        shift = MomentumShift("eq10", scale, m * hf["gravity_momentum"] / scale)
    elif kind == "eq17":
        square = 2 * m * kx
        root = sym("A")
        shift = MomentumShift(
            "eq17", root, m * hf["gravity_momentum"] * root / square, square=square, root_symbol="A"
        )
    else:
        raise ValueError(f"unknown shift kind {kind!r}")

    target = shift.shifted_algebra(hf.algebra)
    x, y, pbx, pby = target.gens()
    inv = shift.inverse_scale
    sub = Substitution.from_mapping(
        hf.algebra,
        target,
        {"x": x, "y": y, "px": pbx * inv, "py": (pby - shift.offset) * inv},
    )
    shifted = sub(hf.raw).map_coefficients(shift.reduce)
    form = collect(shifted, source_map=hf.source_map, shift=shift, kind=hf.kind)
    return replace(form, unshifted=hf)


def unshift(hf: HamiltonianForm) -> HamiltonianForm:
    """Inverse of :func:`momentum_shift`: back to the unshifted NC variables."""
    if hf.shift is None:
        return hf
    shift = hf.shift
    base = hf.unshifted.algebra if hf.unshifted is not None else _unshifted_algebra(hf)
    x, y, px, py = base.gens()
    sub = Substitution.from_mapping(
        hf.algebra,
        base,
        {"x": x, "y": y, "px": px * shift.scale, "py": py * shift.scale + shift.offset},
    )
    raw = sub(hf.raw).map_coefficients(shift.reduce)
    return collect(raw, source_map=hf.source_map, kind=hf.kind)


def _unshifted_algebra(hf: HamiltonianForm) -> AlgebraSpec:
    if hf.source_map is None:
        raise StructuralError("cannot recover the unshifted algebra")
    return hf.source_map.target


def gravity_collapse_terms(hf: HamiltonianForm) -> tuple[ScalarCoefficient, ScalarCoefficient]:
    """(m g C, -m g C xi): the two x-coefficients after the eq10 shift."""
    if hf.shift is None:
        hf = momentum_shift(hf, "eq10")
    base = hf.unshifted["gravity_linear"]
    return base, hf["gravity_linear"] - base


def gravity_collapse_check(hf: HamiltonianForm) -> ScalarCoefficient:
    """m g C - m g C xi, which must reduce to m g exactly."""
    first, second = gravity_collapse_terms(hf)
    total = first + second
    if total != sym("m") * sym("g"):
        raise IdentityCheckError(
            f"gravity collapse gave {total}, expected m*g", "gravity_collapse_check"
        )
    return total


@dataclass(frozen=True)
class CoefficientReport:
    C_prime: ScalarCoefficient
    D: ScalarCoefficient
    E: ScalarCoefficient
    mgC: ScalarCoefficient
    mgC_theta_over_2hbar: ScalarCoefficient

    def as_dict(self) -> dict[str, str]:
        return {
            "C_prime": str(self.C_prime),
            "D": str(self.D),
            "E": str(self.E),
            "mgC": str(self.mgC),
            "mgC_theta_over_2hbar": str(self.mgC_theta_over_2hbar),
        }


def extract_coefficients(hf: HamiltonianForm) -> CoefficientReport:
    """Shorthand coefficients of the full-mode form: C' p^2/2m + D r^2 + E L_z + gravity."""
    m = sym("m")
    return CoefficientReport(
        C_prime=2 * m * hf["kinetic_x"],
        D=hf["confinement"],
        E=hf["angular_momentum"],
        mgC=hf["gravity_linear"],
        mgC_theta_over_2hbar=hf["gravity_momentum"],
    )
