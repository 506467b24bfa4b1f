"""Rank, nullity, determinant, inverse and the four fundamental subspaces.

Everything here is read off a single elimination run:

* row space -- nonzero rows of ``rref(A)``
* column space -- nonzero rows of ``rref(A^T)``
* null space -- rows ``i >= rank`` of ``P`` for ``A^T``
* left null space -- rows ``i >= rank`` of ``P`` for ``A``

Basis vectors come back in ascending row order of the matrix they were read
from, so results are canonical and comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ShapeError
from .fields import Field
from .matrix import Matrix, Vector, stack_rows, transpose
from .rref import OpCounter, gauss_jordan, gauss_jordan_det, gauss_jordan_tracked


@dataclass(frozen=True)
class Basis:
    """Ordered basis of a subspace of ``field^ambient_dim`` (possibly empty)."""

    field: Field
    vectors: tuple[Vector, ...]
    ambient_dim: int

    @property
    def approximate(self) -> bool:
        return not self.field.exact

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def as_matrix(self) -> Optional[Matrix]:
        if not self.vectors:
            return None
        return stack_rows(self.field, [v.entries for v in self.vectors])


def rank(A: Matrix, counter: Optional[OpCounter] = None) -> int:
    return gauss_jordan(A, counter).rank


def nullity(A: Matrix) -> int:
    return A.ncols - rank(A)


def det(A: Matrix, counter: Optional[OpCounter] = None):
    """Determinant as ``b`` times the diagonal product of the rref."""
    trace = gauss_jordan_det(A, counter)
    F = A.field
    d = trace.b
    for i in range(A.nrows):
        d = F.mul(d, trace.rref[i, i])
    return d


def inverse(A: Matrix, counter: Optional[OpCounter] = None) -> Optional[Matrix]:
    """Inverse of a square matrix, or ``None`` when ``A`` is singular."""
    if not A.is_square:
        raise ShapeError(f"inverse needs a square matrix, got {A.nrows}x{A.ncols}")
    tracked = gauss_jordan_tracked(A, counter)
    # rref is the identity exactly when every column holds a pivot.
    if tracked.rank != A.ncols:
        return None
    return tracked.P


def _nonzero_rows(R: Matrix) -> tuple[Vector, ...]:
    F = R.field
    return tuple(Vector(F, r) for r in R.rows() if any(not F.is_zero(x) for x in r))


def basis_row_space(A: Matrix) -> Basis:
    return Basis(A.field, _nonzero_rows(gauss_jordan(A).rref), A.ncols)


def basis_col_space(A: Matrix) -> Basis:
    return Basis(A.field, _nonzero_rows(gauss_jordan(transpose(A)).rref), A.nrows)


def basis_null_space(A: Matrix, counter: Optional[OpCounter] = None) -> Basis:
    """Kernel basis: the rows of ``P`` (for ``A^T``) past the rank."""
    t = gauss_jordan_tracked(transpose(A), counter)
    P = t.P
    return Basis(A.field, tuple(Vector(A.field, P.row(i)) for i in range(t.rank, P.nrows)), A.ncols)


def basis_left_null_space(A: Matrix, counter: Optional[OpCounter] = None) -> Basis:
    t = gauss_jordan_tracked(A, counter)
    P = t.P
    return Basis(A.field, tuple(Vector(A.field, P.row(i)) for i in range(t.rank, P.nrows)), A.nrows)


@dataclass(frozen=True)
class SubspaceBases:
    row: Basis
    col: Basis
    null: Basis
    left_null: Basis


def fundamental_subspaces(A: Matrix) -> SubspaceBases:
    return SubspaceBases(
        basis_row_space(A),
        basis_col_space(A),
        basis_null_space(A),
        basis_left_null_space(A),
    )


def is_linearly_independent(field: Field, vectors) -> bool:
    vectors = list(vectors)
    if not vectors:
        return True
    return rank(stack_rows(field, [v.entries for v in vectors])) == len(vectors)
