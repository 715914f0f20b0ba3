"""Hand-derived coefficients of the transformed Hamiltonians.

Fixtures expand the primed operators by hand:
    p'_x^2 = C^2 (p_x^2 - 2b y p_x + b^2 y^2),  p'_y^2 = C^2 (p_y^2 + 2b x p_y + b^2 x^2)
    x'^2   = C^2 (x^2 + 2a x p_y + a^2 p_y^2),  y'^2   = C^2 (y^2 - 2a y p_x + a^2 p_x^2)
with a = theta/2hbar, b = eta/2hbar.
"""

import pytest

from ncwell.algebra import sym
from ncwell.errors import AlgebraMismatchError, IdentityCheckError, StructuralError
from ncwell.hamiltonian import (
    BUCKETS,
    build_hamiltonian,
    derive,
    extract_coefficients,
    gravity_collapse_check,
    momentum_shift,
    transform_hamiltonian,
    unshift,
)
from ncwell.transform import BoppMap, Direction, Mode

hbar, theta, eta, m, g, k, A = (sym(s) for s in ("hbar", "theta", "eta", "m", "g", "k", "A"))
xi = theta * eta / (4 * hbar**2)
C = 1 / (1 - xi)
a, b = theta / (2 * hbar), eta / (2 * hbar)


def _check(form, expected):
    for name in BUCKETS:
        assert form[name] == expected.get(name, 0), name
    assert form.residual.is_zero()


def test_gravity_full_mode():
    _check(derive("gravity", "full"), {
        "kinetic_x": C**2 / (2 * m),
        "kinetic_y": C**2 / (2 * m),
        "gravity_linear": m * g * C,
        "gravity_momentum": m * g * C * a,
        "angular_momentum": C**2 * b / m,
        "confinement": C**2 * b**2 / (2 * m),
    })


def test_gravity_after_shift():
    shifted = momentum_shift(derive("gravity", "full"), "eq10")
    _check(shifted, {
        "kinetic_x": 1 / (2 * m),
        "kinetic_y": 1 / (2 * m),
        "gravity_linear": m * g,
        "angular_momentum": C * b / m,
        "confinement": C**2 * b**2 / (2 * m),
        "constant": -(m**3) * g**2 * theta**2 / (8 * hbar**2),
    })
    assert shifted.shift.offset == m**2 * g * theta / (2 * hbar)


def test_collapse_is_mg():
    assert gravity_collapse_check(derive("gravity", "full")) == m * g


def test_collapse_check_raises_on_wrong_form():
    # momentum-only: C = 1 and no p_y term, so the check still holds
    assert gravity_collapse_check(derive("gravity", "momentum-only")) == m * g
    bogus = derive("gravity", "full").subs({"g": 0})
    with pytest.raises(IdentityCheckError):
        gravity_collapse_check(bogus)


def test_unshift_round_trip():
    base = derive("gravity-oscillator", "full")
    assert unshift(momentum_shift(base, "eq17")).raw == base.raw
    g_base = derive("gravity", "full")
    assert unshift(momentum_shift(g_base, "eq10")).raw == g_base.raw


def test_gravity_oscillator_full_mode():
    form = derive("gravity-oscillator", "full")
    _check(form, {
        "kinetic_x": C**2 * (1 + m * k * theta**2 / (4 * hbar**2)) / (2 * m),
        "kinetic_y": C**2 * (1 + m * k * theta**2 / (4 * hbar**2)) / (2 * m),
        "gravity_linear": m * g * C,
        "gravity_momentum": m * g * C * a,
        "angular_momentum": C**2 * (eta / (2 * m * hbar) + k * theta / (2 * hbar)),
        "confinement": k * C**2 / 2 + eta**2 * C**2 / (8 * m * hbar**2),
    })
    r = extract_coefficients(form)
    assert r.C_prime == C**2 * (1 + k * m * theta**2 / (4 * hbar**2))


def test_space_only_oscillator():
    form = derive("gravity-oscillator", "space-only")
    assert form["kinetic_x"] == (1 + m * k * theta**2 / (4 * hbar**2)) / (2 * m)
    assert form["angular_momentum"] == k * theta / (2 * hbar)
    shifted = momentum_shift(form, "eq17")
    R = 1 + m * k * theta**2 / (4 * hbar**2)
    assert shifted["kinetic_x"] == 1 / (2 * m)
    assert shifted["gravity_linear"] == m * g / R
    assert shifted["angular_momentum"] == k * theta * A / (2 * hbar * R)


def test_k_zero_reduces_to_gravity():
    full = derive("gravity-oscillator", "full").subs({"k": 0})
    assert full.buckets == derive("gravity", "full").buckets


def test_commutative_mode_is_untouched():
    for kind in ("gravity", "oscillator", "gravity-oscillator"):
        form = derive(kind, "commutative")
        assert str(form.raw) == str(build_hamiltonian(kind))


def test_hamiltonians_are_hermitian():
    from ncwell.algebra import is_hermitian

    for kind in ("gravity", "oscillator", "gravity-oscillator"):
        for mode in Mode:
            assert is_hermitian(derive(kind, mode).raw)


def test_transform_needs_aux_to_nc():
    with pytest.raises(AlgebraMismatchError):
        transform_hamiltonian(build_hamiltonian("gravity"), BoppMap(Mode.FULL, Direction.NC_TO_AUX))


def test_double_shift_rejected():
    shifted = momentum_shift(derive("gravity", "full"), "eq10")
    with pytest.raises(StructuralError):
        momentum_shift(shifted, "eq10")


def test_eq10_shift_needs_c_squared_kinetic():
    with pytest.raises(StructuralError):
        momentum_shift(derive("gravity-oscillator", "full"), "eq10")
