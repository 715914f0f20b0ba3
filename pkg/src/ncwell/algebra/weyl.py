"""Normal-ordered polynomials in x, y, p_x, p_y with constant commutators.

Monomials are exponent 4-tuples ``(a, b, c, d)`` standing for
``x**a * y**b * px**c * py**d`` in exactly that order (positions left of
momenta).  Because every commutator is a central scalar, moving one
generator left past a power of another uses

    h**n * g = g * h**n + n * [h, g] * h**(n-1)

which terminates and gives a unique normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from ..errors import AlgebraMismatchError, NCWellError
from .scalar import I, ScalarCoefficient, sym

GENERATORS = ("x", "y", "px", "py")
_INDEX = {g: i for i, g in enumerate(GENERATORS)}

Monomial = tuple[int, int, int, int]
UNIT: Monomial = (0, 0, 0, 0)


def _gen_index(g) -> int:
    if isinstance(g, int):
        if not 0 <= g < 4:
            raise NCWellError(f"generator index out of range: {g}")
        return g
    try:
        return _INDEX[g]
    except KeyError:
        raise NCWellError(f"unknown generator {g!r}; expected one of {GENERATORS}") from None


@dataclass(frozen=True)
class AlgebraSpec:
    """Commutator table on the generators ``x, y, px, py``.

    Only ``table`` takes part in equality: two algebras with the same
    brackets are the same algebra whatever they are called.
    """

    table: tuple = field()
    name: str = field(default="", compare=False)
    kind: str = field(default="nc", compare=False)
    labels: tuple = field(default=GENERATORS, compare=False)

    @classmethod
    def from_brackets(cls, brackets: Mapping, name="", kind="nc", labels=GENERATORS):
        """Build from ``{(gen_a, gen_b): value}``; both orientations may be given."""
        entries: dict[tuple[int, int], ScalarCoefficient] = {}
        for (a, b), value in brackets.items():
            i, j = _gen_index(a), _gen_index(b)
            value = ScalarCoefficient.coerce(value)
            if i == j:
                if value:
                    raise NCWellError(f"[{GENERATORS[i]}, {GENERATORS[i]}] must vanish")
                continue
            key, v = ((i, j), value) if i < j else ((j, i), -value)
            if key in entries and entries[key] != v:
                raise NCWellError(
                    f"commutator table is not antisymmetric at {GENERATORS[key[0]]}, {GENERATORS[key[1]]}"
                )
            entries[key] = v
        table = tuple(sorted((k, v) for k, v in entries.items() if v))
        return cls(table, name, kind, tuple(labels))

    def bracket(self, a, b) -> ScalarCoefficient:
        i, j = _gen_index(a), _gen_index(b)
        if i == j:
            return ScalarCoefficient.number(0)
        lookup = self._lookup
        if i < j:
            return lookup.get((i, j), _ZERO)
        return -lookup.get((j, i), _ZERO)

    @property
    def _lookup(self) -> dict:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = dict(self.table)
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def gen(self, g) -> "WeylElement":
        mono = [0, 0, 0, 0]
        mono[_gen_index(g)] = 1
        return WeylElement(self, {tuple(mono): ScalarCoefficient.number(1)})

    def gens(self) -> tuple["WeylElement", ...]:
        return tuple(self.gen(g) for g in GENERATORS)

    def scalar(self, c) -> "WeylElement":
        return WeylElement(self, {UNIT: ScalarCoefficient.coerce(c)})

    def one(self) -> "WeylElement":
        return self.scalar(1)

    def zero(self) -> "WeylElement":
        return WeylElement(self, {})

    def relabel(self, name=None, kind=None, labels=None) -> "AlgebraSpec":
        return AlgebraSpec(
            self.table,
            self.name if name is None else name,
            self.kind if kind is None else kind,
            self.labels if labels is None else tuple(labels),
        )

    def __repr__(self):
        rows = ", ".join(f"[{GENERATORS[i]},{GENERATORS[j]}]={v}" for (i, j), v in self.table)
        return f"AlgebraSpec({self.name or 'anonymous'}: {rows})"


_ZERO = ScalarCoefficient.number(0)


def aux_algebra(hbar=None) -> AlgebraSpec:
    """Canonical commutative-geometry algebra: only [x_i, p_i] = i*hbar."""
    hbar = sym("hbar") if hbar is None else ScalarCoefficient.coerce(hbar)
    return AlgebraSpec.from_brackets(
        {("x", "px"): I * hbar, ("y", "py"): I * hbar},
        name="AUX",
        kind="aux",
    )


def nc_algebra(theta=None, eta=None, hbar=None, name="NC") -> AlgebraSpec:
    """Noncommutative phase space: [x,y]=i*theta, [px,py]=i*eta, [x_i,p_i]=i*hbar."""
    theta = sym("theta") if theta is None else ScalarCoefficient.coerce(theta)
    eta = sym("eta") if eta is None else ScalarCoefficient.coerce(eta)
    hbar = sym("hbar") if hbar is None else ScalarCoefficient.coerce(hbar)
    return AlgebraSpec.from_brackets(
        {
            ("x", "y"): I * theta,
            ("px", "py"): I * eta,
            ("x", "px"): I * hbar,
            ("y", "py"): I * hbar,
        },
        name=name,
        kind="nc",
    )


AUX = aux_algebra()
NC = nc_algebra()


# ---------------------------------------------------------------------------
# monomial products


@lru_cache(maxsize=200_000)
def _mono_times_gen(algebra: AlgebraSpec, mono: Monomial, j: int) -> tuple:
    """Normal-ordered expansion of ``mono * G_j`` as ((monomial, coeff), ...)."""
    top = -1
    for i in range(3, j, -1):
        if mono[i]:
            top = i
            break
    if top < 0:
        out = list(mono)
        out[j] += 1
        return ((tuple(out), ScalarCoefficient.number(1)),)

    n = mono[top]
    prefix = list(mono)
    prefix[top] = 0
    prefix = tuple(prefix)
    result: dict[Monomial, ScalarCoefficient] = {}
    # (prefix * G_j) * G_top**n
    for m, c in _mono_times_gen(algebra, prefix, j):
        shifted = list(m)
        shifted[top] += n
        _accumulate(result, tuple(shifted), c)
    # n [G_top, G_j] prefix * G_top**(n-1)
    comm = algebra.bracket(top, j)
    if comm:
        lower = list(prefix)
        lower[top] = n - 1
        _accumulate(result, tuple(lower), comm * n)
    return tuple(result.items())


@lru_cache(maxsize=200_000)
def _mono_mul(algebra: AlgebraSpec, left: Monomial, right: Monomial) -> tuple:
    current: dict[Monomial, ScalarCoefficient] = {left: ScalarCoefficient.number(1)}
    for j in range(4):
        for _ in range(right[j]):
            nxt: dict[Monomial, ScalarCoefficient] = {}
            for m, c in current.items():
                for m2, c2 in _mono_times_gen(algebra, m, j):
                    _accumulate(nxt, m2, c * c2)
            current = nxt
    return tuple(current.items())


def _accumulate(target: dict, mono, coeff) -> None:
    if not coeff:
        return
    prev = target.get(mono)
    if prev is None:
        target[mono] = coeff
    else:
        total = prev + coeff
        if total:
            target[mono] = total
        else:
            del target[mono]


def normal_order(algebra: AlgebraSpec, words: Iterable) -> "WeylElement":
    """Normal-order a sum of generator words.

    ``words`` yields ``(word, coeff)`` pairs where ``word`` is a sequence of
    generator names or indices in arbitrary order.
    """
    result: dict[Monomial, ScalarCoefficient] = {}
    for word, coeff in words:
        coeff = ScalarCoefficient.coerce(coeff)
        current = {UNIT: coeff}
        for g in word:
            j = _gen_index(g)
            nxt: dict[Monomial, ScalarCoefficient] = {}
            for m, c in current.items():
                for m2, c2 in _mono_times_gen(algebra, m, j):
                    _accumulate(nxt, m2, c * c2)
            current = nxt
        for m, c in current.items():
            _accumulate(result, m, c)
    return WeylElement(algebra, result)


def monomial_word(mono: Monomial) -> tuple[int, ...]:
    return tuple(i for i in range(4) for _ in range(mono[i]))


# ---------------------------------------------------------------------------


class WeylElement:
    """Immutable normal-ordered element of an :class:`AlgebraSpec`."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraSpec, terms: Mapping | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = ScalarCoefficient.coerce(c)
            if c:
                if len(mono) != 4 or any(e < 0 for e in mono):
                    raise NCWellError(f"bad monomial {mono!r}")
                clean[tuple(mono)] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("WeylElement is immutable")

    # ---- helpers --------------------------------------------------------
    def _check(self, other: "WeylElement") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"operands live in different algebras ({self.algebra.name or '?'} vs "
                f"{other.algebra.name or '?'})",
                "multiply",
            )

    def _wrap(self, other):
        if isinstance(other, WeylElement):
            self._check(other)
            return other
        return self.algebra.scalar(other)

    def coefficient(self, mono) -> ScalarCoefficient:
        if isinstance(mono, str):
            mono = parse_monomial(mono)
        return self.terms.get(tuple(mono), _ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(m == UNIT for m in self.terms)

    def scalar_part(self) -> ScalarCoefficient:
        return self.terms.get(UNIT, _ZERO)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    # ---- linear structure ----------------------------------------------
    def __add__(self, other):
        try:
            other = self._wrap(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(out, m, c)
        return WeylElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._wrap(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "WeylElement":
        c = ScalarCoefficient.coerce(c)
        if not c:
            return self.algebra.zero()
        return WeylElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    # ---- products -------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        try:
            c = ScalarCoefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    # ---- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.algebra == other.algebra and self.terms == other.terms
        try:
            return self.terms == self.algebra.scalar(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    # ---- symbolic manipulation -----------------------------------------
    def map_coefficients(self, fn) -> "WeylElement":
        return WeylElement(self.algebra, {m: fn(c) for m, c in self.terms.items()})

    def subs(self, values: dict, algebra: AlgebraSpec | None = None) -> "WeylElement":
        """Substitute parameter values into every coefficient.

        The commutator table is not rewritten unless ``algebra`` is given;
        pass the matching specialised algebra when a substituted symbol
        appears in the brackets.
        """
        target = self.algebra if algebra is None else algebra
        return WeylElement(target, {m: c.subs(values) for m, c in self.terms.items()})

    def with_algebra(self, algebra: AlgebraSpec) -> "WeylElement":
        """Reinterpret the stored normal-ordered terms in another algebra."""
        return WeylElement(algebra, self.terms)

    def words(self):
        """Terms as ``(generator word, coeff)`` pairs, e.g. for re-ordering."""
        return [(monomial_word(m), c) for m, c in self.terms.items()]

    def evaluate_coefficients(self, values: dict) -> dict:
        return {m: c.evaluate(values) for m, c in self.terms.items()}

    # ---- rendering -------------------------------------------------------
    def sorted_terms(self):
        # total degree, then exponents: deterministic for serialization
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            label = monomial_label(mono, self.algebra.labels)
            parts.append(f"({c})" if label == "1" else f"({c})*{label}")
        return " + ".join(parts)

    def __repr__(self):
        return f"WeylElement[{self.algebra.name or '?'}]({self})"


def monomial_label(mono: Monomial, labels=GENERATORS) -> str:
    factors = []
    for name, e in zip(labels, mono):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}**{e}")
    return "*".join(factors) if factors else "1"


def parse_monomial(text: str) -> Monomial:
    """Inverse of :func:`monomial_label` for the default labels."""
    text = text.strip()
    if text == "1":
        return UNIT
    mono = [0, 0, 0, 0]
    for factor in re.split(r"\*(?!\*)(?<!\*\*)", text):
        name, _, power = factor.partition("**")
        mono[_gen_index(name.strip())] += int(power) if power else 1
    return tuple(mono)


def multiply(lhs: WeylElement, rhs: WeylElement) -> WeylElement:
    """Normal-ordered product ``lhs * rhs``."""
    lhs._check(rhs)
    algebra = lhs.algebra
    out: dict[Monomial, ScalarCoefficient] = {}
    for m1, c1 in lhs.terms.items():
        for m2, c2 in rhs.terms.items():
            c12 = c1 * c2
            for m, c in _mono_mul(algebra, m1, m2):
                _accumulate(out, m, c12 * c)
    return WeylElement(algebra, out)


def commutator(lhs: WeylElement, rhs: WeylElement) -> WeylElement:
    if lhs.algebra != rhs.algebra:
        raise AlgebraMismatchError("commutator of elements from different algebras", "commutator")
    return multiply(lhs, rhs) - multiply(rhs, lhs)


def formal_adjoint(e: WeylElement) -> WeylElement:
    """Hermitian conjugate: reverse every word, conjugate coefficients.

    Generators are self-adjoint and symbols real.
    """
    words = ((tuple(reversed(monomial_word(m))), c.conjugate()) for m, c in e.terms.items())
    return normal_order(e.algebra, words)


def is_hermitian(e: WeylElement) -> bool:
    return formal_adjoint(e) == e
