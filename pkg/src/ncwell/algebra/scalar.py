"""Exact rational functions over the registered symbols.

A :class:`ScalarCoefficient` is stored as ``(re + i*im) / den`` with
``re``, ``im``, ``den`` polynomials over QQ.  Symbols are real, so the
imaginary unit only ever sits in the numeric part.  The stored form is
canonical:

* ``den`` is monic under the lex order of the symbol registry,
* ``gcd(re, im, den) == 1`` over QQ,
* zero is ``(0, 0, 1)``.

Keeping the denominator real makes conjugation a sign flip on ``im`` and
makes equality a field-by-field comparison.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from sympy import QQ

from ..errors import CoefficientZeroDivision
from .symbols import get_symbol, symbol_ring


def _coerce_poly(p, ring):
    return p if p.ring is ring else p.set_ring(ring)


class ScalarCoefficient:
    """Element of the coefficient field ``QQ(i)(hbar, theta, eta, ...)``."""

    __slots__ = ("re", "im", "den", "_hash")

    def __init__(self, re, im=None, den=None, *, _canonical=False):
        ring = symbol_ring()
        re = _coerce_poly(re, ring)
        im = ring.zero if im is None else _coerce_poly(im, ring)
        den = ring.one if den is None else _coerce_poly(den, ring)
        if not _canonical:
            re, im, den = _canonicalize(re, im, den)
        self.re = re
        self.im = im
        self.den = den
        self._hash = None

    # ---- construction -------------------------------------------------
    @classmethod
    def symbol(cls, name: str) -> "ScalarCoefficient":
        get_symbol(name)
        ring = symbol_ring()
        names = [str(s) for s in ring.symbols]
        return cls(ring.gens[names.index(name)], _canonical=True)

    @classmethod
    def number(cls, real=0, imag=0) -> "ScalarCoefficient":
        ring = symbol_ring()
        return cls(ring(_qq(real)), ring(_qq(imag)), _canonical=True)

    @classmethod
    def coerce(cls, value) -> "ScalarCoefficient":
        if isinstance(value, ScalarCoefficient):
            return value
        if isinstance(value, (int, Rational)):
            return cls.number(value)
        if isinstance(value, complex):
            return cls.number(_exact_float(value.real), _exact_float(value.imag))
        raise TypeError(
            f"cannot use {type(value).__name__} as an exact coefficient; "
            "pass int, Fraction or ScalarCoefficient"
        )

    # ---- ring bookkeeping --------------------------------------------
    @property
    def ring(self):
        return self.re.ring

    def _lift(self) -> "ScalarCoefficient":
        ring = symbol_ring()
        if self.re.ring is ring:
            return self
        return ScalarCoefficient(self.re, self.im, self.den, _canonical=True)

    # ---- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_constant(self) -> bool:
        return self.re.is_ground and self.im.is_ground and self.den.is_ground

    def is_polynomial(self) -> bool:
        return self.den.is_ground

    def free_symbols(self) -> set[str]:
        names = set()
        syms = self.ring.symbols
        for poly in (self.re, self.im, self.den):
            for mono in poly.keys():
                names.update(str(syms[i]) for i, e in enumerate(mono) if e)
        return names

    # ---- parts ----------------------------------------------------------
    @property
    def numerator(self) -> tuple:
        """Gaussian numerator as ``(real_poly, imag_poly)``."""
        return self.re, self.im

    @property
    def denominator(self):
        return self.den

    def real_part(self) -> "ScalarCoefficient":
        return ScalarCoefficient(self.re, None, self.den)

    def imag_part(self) -> "ScalarCoefficient":
        return ScalarCoefficient(self.im, None, self.den)

    def conjugate(self) -> "ScalarCoefficient":
        if not self.im:
            return self
        return ScalarCoefficient(self.re, -self.im, self.den, _canonical=True)

    # ---- arithmetic ---------------------------------------------------
    def __neg__(self):
        return ScalarCoefficient(-self.re, -self.im, self.den, _canonical=True)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = ScalarCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._lift(), other._lift()
        if a.den == b.den:
            return ScalarCoefficient(a.re + b.re, a.im + b.im, a.den)
        return ScalarCoefficient(
            a.re * b.den + b.re * a.den,
            a.im * b.den + b.im * a.den,
            a.den * b.den,
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = ScalarCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = ScalarCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._lift(), other._lift()
        if not b.im:
            re, im = a.re * b.re, a.im * b.re
        elif not a.im:
            re, im = a.re * b.re, a.re * b.im
        else:
            re = a.re * b.re - a.im * b.im
            im = a.re * b.im + a.im * b.re
        return ScalarCoefficient(re, im, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarCoefficient":
        if self.is_zero():
            raise CoefficientZeroDivision("division by a zero coefficient", "scalar_arithmetic")
        a = self._lift()
        norm = a.re * a.re + a.im * a.im
        return ScalarCoefficient(a.den * a.re, -a.den * a.im, norm)

    def __truediv__(self, other):
        try:
            other = ScalarCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ScalarCoefficient.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ScalarCoefficient.number(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---- comparison ---------------------------------------------------
    def __eq__(self, other):
        try:
            other = ScalarCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._lift(), other._lift()
        return a.re == b.re and a.im == b.im and a.den == b.den

    def __hash__(self):
        if self._hash is None:
            # independent of the ring so that lifting keeps the hash
            self._hash = hash(
                (self._key(self.re), self._key(self.im), self._key(self.den))
            )
        return self._hash

    def _key(self, poly):
        names = tuple(map(str, poly.ring.symbols))
        items = []
        for mono, c in poly.items():
            items.append((tuple((names[i], e) for i, e in enumerate(mono) if e), c))
        return frozenset(items)

    def __bool__(self):
        return not self.is_zero()

    # ---- substitution and evaluation --------------------------------
    def subs(self, values: dict) -> "ScalarCoefficient":
        """Substitute exact values (or coefficients) for symbols by name."""
        result_num_re = _subs_poly(self.re, values)
        result_num_im = _subs_poly(self.im, values)
        den = _subs_poly(self.den, values)
        if den.is_zero():
            raise CoefficientZeroDivision(
                f"substitution {sorted(values)} makes the denominator vanish", "subs"
            )
        num = result_num_re + ScalarCoefficient.number(0, 1) * result_num_im
        return num / den

    def evaluate(self, values: dict) -> complex:
        """Floating-point value for numeric symbol values (by name)."""
        syms = [str(s) for s in self.ring.symbols]

        def ev(poly):
            total = 0.0
            for mono, c in poly.items():
                term = float(c)
                for i, e in enumerate(mono):
                    if e:
                        try:
                            term *= values[syms[i]] ** e
                        except KeyError:
                            raise KeyError(f"no value supplied for symbol {syms[i]!r}") from None
                total += term
            return total

        den = ev(self.den)
        if den == 0:
            raise CoefficientZeroDivision("denominator evaluates to zero", "evaluate")
        return complex(ev(self.re), ev(self.im)) / den

    def evaluate_real(self, values: dict) -> float:
        z = self.evaluate(values)
        if z.imag != 0.0:
            raise ValueError(f"coefficient {self} is not real")
        return z.real

    # ---- rendering ----------------------------------------------------
    def __str__(self):
        return _render(self)

    def __repr__(self):
        return f"ScalarCoefficient({_render(self)!r})"

    def to_sympy(self):
        import sympy

        re = self.re.as_expr()
        im = self.im.as_expr()
        den = self.den.as_expr()
        real = {g: sympy.Symbol(str(g), real=True) for g in self.ring.symbols}
        return ((re + sympy.I * im) / den).xreplace(real)


def _qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, Rational):
        return QQ(int(value.numerator), int(value.denominator))
    if isinstance(value, int):
        return QQ(value)
    return QQ(value)


def _exact_float(x: float) -> Fraction:
    f = Fraction(x)
    if f.denominator > 1 << 20:
        raise TypeError(f"complex literal {x!r} has no short exact rational form")
    return f


def _canonicalize(re, im, den):
    if not den:
        raise CoefficientZeroDivision("zero denominator", "scalar_arithmetic")
    ring = den.ring
    if not re and not im:
        return ring.zero, ring.zero, ring.one
    if not den.is_ground:
        g = re.gcd(im) if im else re
        if not g.is_ground:
            g = g.gcd(den)
            if not g.is_ground:
                re = re.exquo(g)
                im = im.exquo(g) if im else im
                den = den.exquo(g)
    lc = den.LC
    if lc != 1:
        re = re.quo_ground(lc)
        im = im.quo_ground(lc) if im else im
        den = den.quo_ground(lc)
    return re, im, den


def _subs_poly(poly, values):
    ring = poly.ring
    syms = [str(s) for s in ring.symbols]
    vals = {name: ScalarCoefficient.coerce(v) for name, v in values.items()}
    total = ScalarCoefficient.number(0)
    for mono, c in poly.items():
        rest = [0] * len(mono)
        factor = ScalarCoefficient.number(Fraction(int(c.numerator), int(c.denominator)))
        for i, e in enumerate(mono):
            if not e:
                continue
            if syms[i] in vals:
                factor = factor * vals[syms[i]] ** e
            else:
                rest[i] = e
        monomial = ScalarCoefficient(ring({tuple(rest): ring.domain.one}), _canonical=True)
        total = total + factor * monomial
    return total


def _fmt_rational(c) -> str:
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _render_poly(poly) -> str:
    if not poly:
        return "0"
    syms = [str(s) for s in poly.ring.symbols]
    parts = []
    for mono, c in poly.terms():  # ring order: deterministic
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(syms[i])
            elif e:
                factors.append(f"{syms[i]}**{e}")
        coeff = _fmt_rational(c)
        if factors:
            if coeff == "1":
                body = "*".join(factors)
            elif coeff == "-1":
                body = "-" + "*".join(factors)
            else:
                body = coeff + "*" + "*".join(factors)
        else:
            body = coeff
        parts.append(body)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _render(c: ScalarCoefficient) -> str:
    re = _render_poly(c.re) if c.re else ""
    im = _render_poly(c.im) if c.im else ""
    if im:
        if im == "1":
            im_txt = "I"
        elif im == "-1":
            im_txt = "-I"
        elif " " not in im:
            im_txt = f"-I*{im[1:]}" if im.startswith("-") else f"I*{im}"
        else:
            im_txt = f"I*({im})"
        if not re:
            num = im_txt
        elif im_txt.startswith("-"):
            num = f"{re} - {im_txt[1:]}"
        else:
            num = f"{re} + {im_txt}"
    else:
        num = re or "0"
    if c.den == 1:
        return num
    den = _render_poly(c.den)
    if len(c.den) > 1 or "*" in den:
        den = f"({den})"
    if " " in num:
        num = f"({num})"
    return f"{num}/{den}"


def sym(name: str) -> ScalarCoefficient:
    """Shorthand for :meth:`ScalarCoefficient.symbol`."""
    return ScalarCoefficient.symbol(name)


def num(real=0, imag=0) -> ScalarCoefficient:
    return ScalarCoefficient.number(real, imag)


_OP_ALIASES = {"+": "add", "-": "sub", "*": "mul", "/": "div"}


def scalar_arithmetic(a, b, op: str) -> ScalarCoefficient:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} (or + - * /) exactly."""
    a = ScalarCoefficient.coerce(a)
    b = ScalarCoefficient.coerce(b)
    op = _OP_ALIASES.get(op, op)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


ZERO = ScalarCoefficient.number(0)
I = ScalarCoefficient.number(0, 1)
ONE = ScalarCoefficient.number(1)
