"""Registry of the real physical parameters that coefficients are built from.

Every symbol carries a dimension tag over the base dimensions
(mass, length, time, charge).  Tags are only consulted by
:func:`dimension_lint`; arithmetic never looks at them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import QQ
from sympy.polys.rings import PolyRing

from ..errors import NCWellError

Dimension = tuple[int, int, int, int]

DIMENSIONLESS: Dimension = (0, 0, 0, 0)


@dataclass(frozen=True)
class ParamSymbol:
    name: str
    dimension: Dimension = DIMENSIONLESS

    def __str__(self) -> str:
        return self.name


_REGISTRY: dict[str, ParamSymbol] = {}
_RING: PolyRing | None = None


def register_symbol(name: str, dimension: Dimension = DIMENSIONLESS) -> ParamSymbol:
    """Add ``name`` to the registry, or return it if already present.

    Re-registering with a different dimension is an error; tags are fixed
    at first registration.
    """
    if not name.isidentifier():
        raise NCWellError(f"symbol name must be an identifier, got {name!r}")
    existing = _REGISTRY.get(name)
    if existing is not None:
        if existing.dimension != tuple(dimension):
            raise NCWellError(
                f"symbol {name!r} already registered with dimension {existing.dimension}"
            )
        return existing
    sym = ParamSymbol(name, tuple(dimension))
    _REGISTRY[name] = sym
    global _RING
    _RING = _ring_for(tuple(_REGISTRY))
    return sym


def registered_symbols() -> tuple[ParamSymbol, ...]:
    return tuple(_REGISTRY.values())


def get_symbol(name: str) -> ParamSymbol:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise NCWellError(f"unknown symbol {name!r}") from None


@lru_cache(maxsize=None)
def _ring_for(names: tuple[str, ...]) -> PolyRing:
    return PolyRing(names, QQ)


def symbol_ring() -> PolyRing:
    """Polynomial ring over QQ in every registered symbol (lex order)."""
    return _RING


#            M   L   T   Q
register_symbol("hbar", (1, 2, -1, 0))
register_symbol("theta", (0, 2, 0, 0))
register_symbol("eta", (2, 2, -2, 0))
register_symbol("m", (1, 0, 0, 0))
register_symbol("g", (0, 1, -2, 0))
register_symbol("k", (1, 0, -2, 0))
register_symbol("q", (0, 0, 0, 1))
register_symbol("B", (1, 0, -1, -1))
register_symbol("omega", (0, 0, -1, 0))
# square-root scale factor of a momentum shift; only its square is known
register_symbol("A", DIMENSIONLESS)


def monomial_dimension(exponents, symbols=None) -> Dimension:
    symbols = symbols or registered_symbols()
    total = [0, 0, 0, 0]
    for sym, e in zip(symbols, exponents):
        if e:
            for i in range(4):
                total[i] += e * sym.dimension[i]
    return tuple(total)


def dimension_lint(coeff) -> Dimension | None:
    """Dimension of a coefficient, or None when it is not homogeneous.

    A sum such as ``1 + theta`` mixes dimensions and lints as None.
    """
    dims = set()
    syms = tuple(_REGISTRY[s] for s in map(str, coeff.ring.symbols))
    for poly in (coeff.re, coeff.im):
        for mono in poly.keys():
            dims.add(monomial_dimension(mono, syms))
    if len(dims) > 1:
        return None
    num = dims.pop() if dims else DIMENSIONLESS
    den_dims = {monomial_dimension(mono, syms) for mono in coeff.den.keys()}
    if len(den_dims) > 1:
        return None
    den = den_dims.pop()
    return tuple(a - b for a, b in zip(num, den))
