"""Truncated expansions in the noncommutative parameters.

The NC order of a monomial is its combined power of ``theta`` and ``eta``.
A rational coefficient is expanded as a power series in a bookkeeping
scale ``eps`` (theta -> eps*theta, eta -> eps*eta) and cut at a fixed
total order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.scalar import ScalarCoefficient, sym
from ..errors import NCWellError

NC_SYMBOLS = ("theta", "eta")


def _graded_pieces(poly, max_order: int) -> list:
    """Split a polynomial by NC order into ScalarCoefficients (orders 0..max_order)."""
    ring = poly.ring
    names = [str(s) for s in ring.symbols]
    idx = [names.index(s) for s in NC_SYMBOLS]
    buckets: list[dict] = [dict() for _ in range(max_order + 1)]
    for mono, c in poly.items():
        order = sum(mono[i] for i in idx)
        if order <= max_order:
            buckets[order][mono] = c
    return [ScalarCoefficient(ring.from_dict(b) if b else ring.zero) for b in buckets]


def nc_order_range(c: ScalarCoefficient) -> tuple[int, int]:
    """(lowest, highest) NC order among the numerator monomials.

    The denominator must be free of theta and eta.
    """
    c = ScalarCoefficient.coerce(c)._lift()
    names = [str(s) for s in c.ring.symbols]
    idx = [names.index(s) for s in NC_SYMBOLS]
    if any(mono[i] for mono in c.den.keys() for i in idx):
        raise NCWellError("NC order is only defined when theta and eta stay out of the denominator")
    orders = [sum(m[i] for i in idx) for poly in (c.re, c.im) for m in poly.keys()]
    if not orders:
        return (0, 0)
    return (min(orders), max(orders))


@dataclass(frozen=True)
class NCSeries:
    """Coefficients of eps**0 .. eps**order."""

    pieces: tuple

    @property
    def order(self) -> int:
        return len(self.pieces) - 1

    @classmethod
    def from_coefficient(cls, c, order: int) -> "NCSeries":
        c = ScalarCoefficient.coerce(c)._lift()
        if order < 0:
            raise NCWellError("truncation order must be non-negative")
        num = [
            re + ScalarCoefficient.number(0, 1) * im
            for re, im in zip(_graded_pieces(c.re, order), _graded_pieces(c.im, order))
        ]
        den = _graded_pieces(c.den, order)
        d0 = den[0]
        if d0.is_zero():
            raise NCWellError(f"{c} has a pole at theta = eta = 0; no Taylor expansion")
        inv_d0 = d0.inverse()
        out = []
        for n in range(order + 1):
            acc = num[n]
            for j in range(1, n + 1):
                if den[j]:
                    acc = acc - den[j] * out[n - j]
            out.append(acc * inv_d0)
        return cls(tuple(out))

    def _pad(self, order):
        zero = ScalarCoefficient.number(0)
        return self.pieces[: order + 1] + (zero,) * max(0, order + 1 - len(self.pieces))

    def __add__(self, other: "NCSeries") -> "NCSeries":
        order = min(self.order, other.order)
        return NCSeries(tuple(a + b for a, b in zip(self._pad(order), other._pad(order))))

    def __mul__(self, other: "NCSeries") -> "NCSeries":
        order = min(self.order, other.order)
        a, b = self._pad(order), other._pad(order)
        out = []
        for n in range(order + 1):
            acc = ScalarCoefficient.number(0)
            for j in range(n + 1):
                if a[j] and b[n - j]:
                    acc = acc + a[j] * b[n - j]
            out.append(acc)
        return NCSeries(tuple(out))

    def power(self, alpha) -> "NCSeries":
        """(1 + X)**alpha for a series whose order-0 piece is exactly 1."""
        if self.pieces[0] != 1:
            raise NCWellError("binomial series needs a unit leading term")
        alpha = Fraction(alpha)
        zero = ScalarCoefficient.number(0)
        x = NCSeries((zero,) + self.pieces[1:])
        result = NCSeries((ScalarCoefficient.number(1),) + (zero,) * self.order)
        term = result
        binom = Fraction(1)
        for j in range(1, self.order + 1):
            binom = binom * (alpha - j + 1) / j
            term = term * x
            result = result + NCSeries(tuple(p * binom for p in term.pieces))
        return result

    def total(self) -> ScalarCoefficient:
        acc = ScalarCoefficient.number(0)
        for p in self.pieces:
            acc = acc + p
        return acc


def truncate_nc_order(c, max_order: int) -> ScalarCoefficient:
    """Taylor polynomial of ``c`` in (theta, eta) up to total order ``max_order``."""
    return NCSeries.from_coefficient(c, max_order).total()


def expand_C_series(
    max_order: int,
    *,
    k=None,
    m=None,
    theta=None,
    eta=None,
    hbar=None,
    convention: str = "paper",
) -> ScalarCoefficient:
    """Truncated expansion of ``C * (1 + m k theta^2 / 4 hbar^2)**(1/2)``.

    ``convention`` fixes the sign of the cross term inside C:

    * ``"paper"``: C = (1 + theta eta/4 hbar^2)**-1, whose first-order term
      is ``-eta theta/4 hbar^2`` (the sign carried by the general xi').
    * ``"map"``: C = (1 - theta eta/4 hbar^2)**-1, the factor of the
      AUX -> NC Bopp map.

    Grading is by the registered ``theta`` and ``eta`` symbols, so pass
    symbolic (or symbol-multiple) values for those two.
    """
    if max_order < 0:
        raise NCWellError("max_order must be >= 0")
    k = sym("k") if k is None else ScalarCoefficient.coerce(k)
    m = sym("m") if m is None else ScalarCoefficient.coerce(m)
    theta = sym("theta") if theta is None else ScalarCoefficient.coerce(theta)
    eta = sym("eta") if eta is None else ScalarCoefficient.coerce(eta)
    hbar = sym("hbar") if hbar is None else ScalarCoefficient.coerce(hbar)
    xi = theta * eta / (4 * hbar**2)
    if convention == "paper":
        c_factor = 1 / (1 + xi)
    elif convention == "map":
        c_factor = 1 / (1 - xi)
    else:
        raise NCWellError(f"unknown convention {convention!r}")
    radicand = NCSeries.from_coefficient(1 + m * k * theta**2 / (4 * hbar**2), max_order)
    series = NCSeries.from_coefficient(c_factor, max_order) * radicand.power(Fraction(1, 2))
    return series.total()
