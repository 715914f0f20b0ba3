import random

import pytest

from ncwell.algebra import AUX, NC, random_element, sym
from ncwell.algebra.scalar import I
from ncwell.errors import AlgebraMismatchError, NCWellError
from ncwell.transform import (
    BoppMap,
    Direction,
    Mode,
    NCSeries,
    apply_map,
    effective_planck,
    expand_C_series,
    nc_order_range,
    truncate_nc_order,
    verify_effective_commutator,
)

hbar, theta, eta, m, k = (sym(s) for s in ("hbar", "theta", "eta", "m", "k"))
xi = theta * eta / (4 * hbar**2)


def test_effective_commutator():
    c = verify_effective_commutator()
    assert c.is_scalar()
    assert c.scalar_part() == I * hbar * (1 + xi)


def test_round_trip_identity_all_modes():
    for mode in Mode:
        fwd = BoppMap(mode, Direction.NC_TO_AUX)
        back = fwd.inverse()
        for g in ("x", "y", "px", "py"):
            image = apply_map(back, fwd.substitution.image(g))
            assert image == back.target.gen(g), (mode, g)


def test_commutative_mode_is_identity():
    bmap = BoppMap(Mode.COMMUTATIVE)
    assert bmap.C == 1
    for g in ("x", "y", "px", "py"):
        assert bmap.substitution.image(g) == bmap.target.gen(g)


def test_space_only_has_unit_C():
    assert BoppMap(Mode.SPACE_ONLY).C == 1
    assert BoppMap(Mode.MOMENTUM_ONLY).C == 1
    assert BoppMap(Mode.FULL).C * (1 - xi) == 1


def test_homomorphism_scope():
    for mode in (Mode.SPACE_ONLY, Mode.MOMENTUM_ONLY, Mode.COMMUTATIVE):
        for d in Direction:
            assert BoppMap(mode, d).is_homomorphism()
    full = BoppMap(Mode.FULL, Direction.NC_TO_AUX)
    assert not full.is_homomorphism()
    x, _, px, _ = full.induced_source.gens()
    assert (x * px - px * x).scalar_part() == I * hbar * (1 + xi)


@pytest.mark.parametrize("mode", list(Mode))
@pytest.mark.parametrize("direction", list(Direction))
def test_map_respects_products(mode, direction):
    bmap = BoppMap(mode, direction)
    alg = bmap.induced_source
    rng = random.Random(11)
    for _ in range(15):
        a, b = random_element(alg, rng), random_element(alg, rng)
        assert apply_map(bmap, a * b) == apply_map(bmap, a) * apply_map(bmap, b)


def test_wrong_algebra_rejected():
    bmap = BoppMap(Mode.FULL, Direction.AUX_TO_NC)
    with pytest.raises(AlgebraMismatchError):
        apply_map(bmap, NC.gen("x"))
    apply_map(bmap, AUX.gen("x"))
    with pytest.raises(AlgebraMismatchError):
        verify_effective_commutator(bmap)


def test_planck_variants():
    simple = effective_planck()
    assert simple.xi == xi
    assert simple.hbar_eff == hbar * (1 + xi)
    general = effective_planck(variant="general")
    assert general.xi == m * k * theta**2 / (8 * hbar**2) - eta * theta / (4 * hbar**2)
    assert effective_planck(k=0, variant="general").xi == -xi


def test_series_order_two():
    assert expand_C_series(2) == 1 + m * k * theta**2 / (8 * hbar**2) - eta * theta / (4 * hbar**2)
    assert expand_C_series(2, convention="map") == 1 + m * k * theta**2 / (8 * hbar**2) + xi


def test_series_higher_orders_only_add_higher_monomials():
    diff = expand_C_series(4) - expand_C_series(2)
    assert nc_order_range(diff) == (4, 4)
    assert nc_order_range(expand_C_series(3) - expand_C_series(2)) == (0, 0)  # no odd orders


def test_series_matches_direct_taylor():
    # 1/(1+xi) to order 4 in (theta, eta) is 1 - xi + xi^2
    assert truncate_nc_order(1 / (1 + xi), 4) == 1 - xi + xi**2
    assert truncate_nc_order(1 / (1 + xi), 3) == 1 - xi


def test_binomial_power():
    s = NCSeries.from_coefficient(1 + theta, 3).power(-1)
    assert s.total() == 1 - theta + theta**2 - theta**3


def test_series_errors():
    with pytest.raises(NCWellError):
        expand_C_series(-1)
    with pytest.raises(NCWellError):
        NCSeries.from_coefficient(1 / theta, 2)
    with pytest.raises(NCWellError):
        expand_C_series(2, convention="other")
