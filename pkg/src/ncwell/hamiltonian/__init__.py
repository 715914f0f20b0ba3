"""Hamiltonian construction, bucketing, momentum shifts and conformance."""

from .builder import (
    BUCKETS,
    CoefficientReport,
    HamiltonianForm,
    HamiltonianKind,
    MomentumShift,
    build_hamiltonian,
    collect,
    derive,
    extract_coefficients,
    gravity_collapse_check,
    gravity_collapse_terms,
    momentum_shift,
    reduce_square,
    transform_hamiltonian,
    unshift,
)
from .conformance import (
    MATCH,
    MISMATCH,
    UNSPECIFIED,
    ConformanceReport,
    Row,
    Target,
    conformance_report,
    full_conformance,
    pipeline,
)

__all__ = [
    "MATCH", "MISMATCH", "UNSPECIFIED", "ConformanceReport", "Row", "Target",
    "conformance_report", "full_conformance", "pipeline",
    "BUCKETS", "CoefficientReport", "HamiltonianForm", "HamiltonianKind", "MomentumShift",
    "build_hamiltonian", "collect", "derive", "extract_coefficients",
    "gravity_collapse_check", "gravity_collapse_terms", "momentum_shift", "reduce_square",
    "transform_hamiltonian", "unshift",
]
