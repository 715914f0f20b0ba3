from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ncwell.algebra.scalar import I, ONE, ZERO, ScalarCoefficient, num, scalar_arithmetic, sym
from ncwell.algebra.symbols import dimension_lint, register_symbol
from ncwell.errors import CoefficientZeroDivision, NCWellError

hbar, theta, eta, m, k = (sym(s) for s in ("hbar", "theta", "eta", "m", "k"))


def test_xi_over_itself_is_one():
    xi = theta * eta / (4 * hbar**2)
    assert xi / xi == 1


def test_divide_by_zero_raises():
    with pytest.raises(CoefficientZeroDivision):
        scalar_arithmetic(ONE, ZERO, "/")
    with pytest.raises(ZeroDivisionError):
        theta / (eta - eta)


def test_C_times_one_minus_xi():
    xi = theta * eta / (4 * hbar**2)
    assert (1 / (1 - xi)) * (1 - xi) == 1


def test_canonical_form_is_unique():
    a = (theta**2 - eta**2) / (theta - eta)
    assert a == theta + eta
    assert a.den == ONE.den
    assert str(a) == str(theta + eta)
    assert hash(a) == hash(theta + eta)


def test_gaussian_parts():
    z = (theta + I * eta) / hbar
    assert z.real_part() == theta / hbar
    assert z.imag_part() == eta / hbar
    assert z.conjugate() == (theta - I * eta) / hbar
    assert (z * z.conjugate()).is_real()
    assert (I * I) == -1


def test_inverse_of_complex():
    z = theta + I * eta
    assert z * z.inverse() == 1


def test_coerce_rejects_float():
    with pytest.raises(TypeError):
        ScalarCoefficient.coerce(0.1)
    assert ScalarCoefficient.coerce(Fraction(1, 3)) * 3 == 1
    assert ScalarCoefficient.coerce(2 + 3j) == num(2, 3)


def test_rendering():
    assert str(I * hbar) == "I*hbar"
    assert str(-I * hbar) == "-I*hbar"
    assert str(ZERO) == "0"
    assert "/(" in str(ONE / (hbar**2 * m))


def test_subs_and_evaluate():
    c = theta * eta / (4 * hbar**2)
    assert c.subs({"theta": 2, "eta": 2, "hbar": 1}) == 1
    assert c.evaluate_real({"theta": 2.0, "eta": 2.0, "hbar": 1.0}) == pytest.approx(1.0)
    with pytest.raises(CoefficientZeroDivision):
        (theta / hbar).subs({"hbar": 0})


def test_to_sympy_roundtrip():
    c = (theta + I * eta) / (2 * hbar)
    s = sympy.symbols("theta eta hbar", real=True)
    assert sympy.simplify(c.to_sympy() - (s[0] + sympy.I * s[1]) / (2 * s[2])) == 0


def test_dimension_lint():
    xi = theta * eta / (4 * hbar**2)
    assert dimension_lint(xi) == (0, 0, 0, 0)
    assert dimension_lint(1 + theta) is None


def test_reregister_with_other_dimension_fails():
    with pytest.raises(NCWellError):
        register_symbol("hbar", (0, 0, 0, 0))


def test_ring_growth_keeps_equality():
    before = theta / hbar
    register_symbol("zz_test_symbol", (0, 0, 0, 0))
    after = sym("zz_test_symbol") * theta / (hbar * sym("zz_test_symbol"))
    assert before == after


_atoms = st.sampled_from([hbar, theta, eta, m, k, ONE, I])
_ints = st.integers(-5, 5)


@st.composite
def coefficients(draw):
    c = ScalarCoefficient.number(draw(_ints), draw(_ints))
    for _ in range(draw(st.integers(0, 3))):
        c = c + draw(_atoms) * draw(_ints) * draw(_atoms)
    if draw(st.booleans()):
        d = draw(_atoms) + draw(st.integers(1, 3))
        c = c / d
    return c


@settings(max_examples=150, deadline=None)
@given(coefficients(), coefficients(), coefficients())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if b:
        assert (a / b) * b == a
    assert a.conjugate().conjugate() == a
