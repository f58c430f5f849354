"""Homotopy-group calculus: abelian groups, sphere tables, fibration
sequences and the compact-group obstruction search."""

from .abelian import FgAbelianGroup, TRIVIAL, Z, cyclic, direct_sum, smith_normal_form
from .groups import CompactGroupDescriptor, default_catalog
from .les import (LesConstraint, hopf_constraints, les_quotient_constraints,
                  les_sphere_quotient_constraints)
from .search import NO_SOLUTION, SearchResult, obstruction_search
from .spheres import sphere_pi, sphere_pi_finite

__all__ = [
    "FgAbelianGroup", "TRIVIAL", "Z", "cyclic", "direct_sum", "smith_normal_form",
    "CompactGroupDescriptor", "default_catalog", "LesConstraint", "hopf_constraints",
    "les_quotient_constraints", "les_sphere_quotient_constraints", "NO_SOLUTION",
    "SearchResult", "obstruction_search", "sphere_pi", "sphere_pi_finite",
]
