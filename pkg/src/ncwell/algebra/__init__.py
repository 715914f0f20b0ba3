"""Exact coefficient field and the noncommutative Weyl algebra."""

from .properties import random_element, run_property_suite
from .scalar import I, ONE, ZERO, ScalarCoefficient, num, scalar_arithmetic, sym
from .substitution import Substitution
from .symbols import ParamSymbol, dimension_lint, register_symbol, registered_symbols
from .weyl import (
    AUX,
    GENERATORS,
    NC,
    AlgebraSpec,
    WeylElement,
    aux_algebra,
    commutator,
    formal_adjoint,
    is_hermitian,
    multiply,
    nc_algebra,
    normal_order,
)

__all__ = [
    "AUX", "GENERATORS", "I", "NC", "ONE", "ZERO",
    "AlgebraSpec", "ParamSymbol", "ScalarCoefficient", "Substitution", "WeylElement",
    "aux_algebra", "commutator", "dimension_lint", "formal_adjoint", "is_hermitian",
    "multiply", "nc_algebra", "normal_order", "num", "random_element", "run_property_suite", "register_symbol",
    "registered_symbols", "scalar_arithmetic", "sym",
]
