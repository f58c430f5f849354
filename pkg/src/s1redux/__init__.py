"""Symplectic quotients of linear circle actions: geometry, invariants,
homotopy obstructions and groupoid nerves."""

from .errors import S1ReduxError
from .invariants import invariant_monoid_basis
from .momentum import cone_link_decomposition, momentum, reduced_dimension, sample_zero_fiber
from .verdict import analyze, consistency_audit, hss_cross_check, main_theorem_verdict
from .weights import WeightVector, classify_signs, normalize_effective

__version__ = "0.1.0"

__all__ = [
    "S1ReduxError", "WeightVector", "analyze", "classify_signs", "cone_link_decomposition",
    "consistency_audit", "hss_cross_check", "invariant_monoid_basis", "main_theorem_verdict", "momentum",
    "normalize_effective", "reduced_dimension", "sample_zero_fiber",
]
