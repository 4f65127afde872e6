"""Exact computations for interval-firing processes on root systems."""

from .appendix import kappa_statistics, oshima_check, projection_dilation_max
from .ehrhart import counterexample_scan, sym_formula, tr_conjecture_rhs
from .errors import (BadParam, DependentSet, DifferentCoset, DimensionError, InvalidType,
                     InvariantViolation, NonPolynomialFit, NonTermination, NotDominant,
                     ResourceLimit, RootFiringError, StepLimit, UnmatchedStablePoint)
from .exactla import enumerate_indep_sets, rvol
from .firing import FiringMode, fiber_table, simulated_poly, stabilize, stable_label
from .permutohedra import (discrete_permutohedron, perm_count_direct, perm_count_formula,
                           perm_count_poly)
from .poly import EhrhartPoly, hstar_numerator, parse_poly
from .rootsys import DeformParam, RootSystem, TypeLabel, build
from .typea import f_lambda, typeA_count, typeA_poly
from .zonotope import minkowski_count, minkowski_poly, stanley_poly

__all__ = [
    "BadParam", "DeformParam", "DependentSet", "DifferentCoset", "DimensionError",
    "EhrhartPoly", "FiringMode", "InvalidType", "InvariantViolation", "NonPolynomialFit",
    "NonTermination", "NotDominant", "ResourceLimit", "RootFiringError", "RootSystem",
    "StepLimit", "TypeLabel", "UnmatchedStablePoint", "build", "counterexample_scan",
    "discrete_permutohedron", "enumerate_indep_sets", "f_lambda", "fiber_table",
    "hstar_numerator", "kappa_statistics", "minkowski_count", "minkowski_poly",
    "oshima_check", "parse_poly", "perm_count_direct", "perm_count_formula",
    "perm_count_poly", "projection_dilation_max", "rvol", "simulated_poly", "stabilize",
    "stable_label", "stanley_poly", "sym_formula", "tr_conjecture_rhs", "typeA_count",
    "typeA_poly",
]
