"""Generalized Hamming weights and support-constrained generator matrices over finite fields."""

from .codes import (
    LinearCode,
    WeightHierarchy,
    check_row_zero_sets,
    ghw,
    is_r_mds,
    min_distance,
    min_weight_span,
    vanishing_subcode,
    weight_hierarchy,
)
from .errors import GHWForgeError, TooLarge
from .families import (
    PlaneCubic,
    common_zero_witnesses,
    cubic_line_code,
    elliptic_example_f4,
    gm_mds_solve,
    reed_muller_1,
    reed_solomon,
    rs_code,
)
from .field import FieldSpec, field_new, field_of_order
from .harness import FalsifyConfig, Reproduction, falsify
from .kernels import backend
from .linalg import GFMatrix, Subspace
from .sets import SubsetSystem, check_cardinality, check_ghw_constraints, check_mds_condition
from .solver import Feasible, Infeasible, exhaustive_oracle, solve_support_constrained, verify_solution

__version__ = "0.1.0"

__all__ = [
    "FalsifyConfig",
    "Feasible",
    "FieldSpec",
    "GFMatrix",
    "GHWForgeError",
    "Infeasible",
    "LinearCode",
    "PlaneCubic",
    "Reproduction",
    "Subspace",
    "SubsetSystem",
    "TooLarge",
    "WeightHierarchy",
    "backend",
    "check_cardinality",
    "check_ghw_constraints",
    "check_mds_condition",
    "check_row_zero_sets",
    "common_zero_witnesses",
    "cubic_line_code",
    "elliptic_example_f4",
    "exhaustive_oracle",
    "falsify",
    "field_new",
    "field_of_order",
    "ghw",
    "gm_mds_solve",
    "is_r_mds",
    "min_distance",
    "min_weight_span",
    "reed_muller_1",
    "reed_solomon",
    "rs_code",
    "solve_support_constrained",
    "vanishing_subcode",
    "verify_solution",
    "weight_hierarchy",
]
