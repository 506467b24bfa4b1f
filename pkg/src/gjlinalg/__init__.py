"""Gauss-Jordan elimination with tracked row operations over GF(2), Q and R."""

__version__ = "0.1.0"

from .apps import (
    Basis,
    SubspaceBases,
    basis_col_space,
    basis_left_null_space,
    basis_null_space,
    basis_row_space,
    det,
    fundamental_subspaces,
    inverse,
    is_linearly_independent,
    nullity,
    rank,
)
from .errors import (
    BoundsError,
    ContractError,
    DomainError,
    LinalgError,
    ParseError,
    PivotNotFoundError,
    ShapeError,
)
from .fields import GF2, Field, Rationals, Reals, field_laws_check, get_field, parse_element
from .matrix import (
    FuncMatrix,
    Matrix,
    Vector,
    from_func,
    identity,
    interchange_rows,
    mat_mul,
    mat_vec_mul,
    mult_row,
    row_add,
    to_func,
    transpose,
    zero,
)
from .rref import (
    DetTrace,
    OpCounter,
    RrefResult,
    TrackedRref,
    gauss_jordan,
    gauss_jordan_det,
    gauss_jordan_reference,
    gauss_jordan_tracked,
    gj_pivot_step,
    is_rref,
)
from .solver import SolutionSet, Status, solve, verify_solution
