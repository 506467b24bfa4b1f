"""Dense matrices, vectors and elementary row operations.

Two representations live here:

* :class:`Matrix` -- immutable, row-major flat storage.  This is the one the
  rest of the package computes with.
* :class:`FuncMatrix` -- a matrix given by an index function ``(i, j) -> x``.
  Row operations on it build new lookup functions instead of touching
  storage.  It serves as the reference semantics that the dense code is
  checked against.

Indices are zero based.  Empty matrices (a dimension of 0) are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import BoundsError, ContractError, ShapeError
from .fields import Field


def _check_dims(m: int, n: int) -> None:
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1:
        raise ShapeError(f"matrix dimensions must be positive integers, got {m}x{n}")


class Matrix:
    """An ``nrows x ncols`` matrix over ``field``; entries stored row-major."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, nrows: int, ncols: int, entries: Iterable):
        _check_dims(nrows, ncols)
        entries = tuple(entries)
        if len(entries) != nrows * ncols:
            raise ShapeError(
                f"expected {nrows * ncols} entries for a {nrows}x{ncols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        """Build a matrix from nested sequences, coercing each value into ``field``."""
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ShapeError("matrix must have at least one row and one column")
        n = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ShapeError(f"row {i} has {len(r)} entries, expected {n}")
        conv = field.convert
        return cls(field, len(rows), n, (conv(x) for r in rows for x in r))

    @classmethod
    def _trusted(cls, field, nrows, ncols, entries) -> "Matrix":
        # Skips validation; entries must already be a tuple of canonical elements.
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "nrows", nrows)
        object.__setattr__(obj, "ncols", ncols)
        object.__setattr__(obj, "entries", entries)
        return obj

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx: tuple[int, int]):
        i, j = idx
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise BoundsError(f"index ({i}, {j}) out of range for {self.nrows}x{self.ncols}")
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple:
        _check_row(self, i)
        n = self.ncols
        return self.entries[i * n:(i + 1) * n]

    def col(self, j: int) -> tuple:
        if not 0 <= j < self.ncols:
            raise BoundsError(f"column {j} out of range for {self.ncols} columns")
        return self.entries[j::self.ncols]

    def rows(self) -> list[tuple]:
        n = self.ncols
        return [self.entries[i * n:(i + 1) * n] for i in range(self.nrows)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self) -> str:
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows())
        return f"Matrix<{self.field.name} {self.nrows}x{self.ncols}>[{body}]"


@dataclass(frozen=True)
class Vector:
    """A column vector of length ``len(entries) >= 1``."""

    field: Field
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 1:
            raise ShapeError("vector must have at least one entry")

    @classmethod
    def of(cls, field: Field, values: Iterable) -> "Vector":
        return cls(field, tuple(field.convert(v) for v in values))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for x in self.entries)


class FuncMatrix:
    """Matrix represented by a total lookup function on ``[0,m) x [0,n)``."""

    __slots__ = ("field", "nrows", "ncols", "lookup")

    def __init__(self, field: Field, nrows: int, ncols: int, lookup: Callable[[int, int], object]):
        _check_dims(nrows, ncols)
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.lookup = lookup

    def __call__(self, i: int, j: int):
        return self.lookup(i, j)

    def _derive(self, fn: Callable[[int, int], object]) -> "FuncMatrix":
        # Each derived lookup memoizes so that long chains of row operations
        # evaluate every entry of every intermediate matrix at most once.
        return FuncMatrix(self.field, self.nrows, self.ncols, lru_cache(maxsize=None)(fn))


# -- constructors ------------------------------------------------------------

def identity(field: Field, n: int) -> Matrix:
    _check_dims(n, n)
    z, o = field.zero, field.one
    return Matrix._trusted(field, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))


def zero(field: Field, m: int, n: int) -> Matrix:
    _check_dims(m, n)
    return Matrix._trusted(field, m, n, (field.zero,) * (m * n))


# -- elementary row operations (dense) ----------------------------------------

def _check_row(A, i: int) -> None:
    if not (isinstance(i, int) and 0 <= i < A.nrows):
        raise BoundsError(f"row index {i} out of range for {A.nrows} rows")


def interchange_rows(A: Matrix, i: int, j: int) -> Matrix:
    _check_row(A, i)
    _check_row(A, j)
    if i == j:
        return A
    rows = A.rows()
    rows[i], rows[j] = rows[j], rows[i]
    return Matrix._trusted(A.field, A.nrows, A.ncols, tuple(x for r in rows for x in r))


def mult_row(A: Matrix, i: int, c) -> Matrix:
    """Scale row ``i`` by ``c``."""
    _check_row(A, i)
    F = A.field
    c = F.convert(c)
    n = A.ncols
    e = list(A.entries)
    e[i * n:(i + 1) * n] = [F.mul(x, c) for x in e[i * n:(i + 1) * n]]
    return Matrix._trusted(F, A.nrows, n, tuple(e))


def row_add(A: Matrix, t: int, l: int, c) -> Matrix:
    """Replace row ``t`` by ``row t + c * row l``; ``t`` must differ from ``l``."""
    _check_row(A, t)
    _check_row(A, l)
    if t == l:
        raise ContractError("row_add requires two distinct rows")
    F = A.field
    c = F.convert(c)
    n = A.ncols
    e = list(A.entries)
    src = A.entries[l * n:(l + 1) * n]
    e[t * n:(t + 1) * n] = [F.add(x, F.mul(c, y)) for x, y in zip(e[t * n:(t + 1) * n], src)]
    return Matrix._trusted(F, A.nrows, n, tuple(e))


def transpose(A: Matrix) -> Matrix:
    m, n = A.shape
    e = A.entries
    return Matrix._trusted(A.field, n, m, tuple(e[i * n + j] for j in range(n) for i in range(m)))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.ncols != B.nrows:
        raise ShapeError(f"cannot multiply {A.nrows}x{A.ncols} by {B.nrows}x{B.ncols}")
    F = A.field
    add, mul = F.add, F.mul
    cols = [B.col(j) for j in range(B.ncols)]
    out = []
    for r in A.rows():
        for c in cols:
            acc = F.zero
            for x, y in zip(r, c):
                acc = add(acc, mul(x, y))
            out.append(acc)
    return Matrix._trusted(F, A.nrows, B.ncols, tuple(out))


def mat_vec_mul(A: Matrix, x: Vector) -> Vector:
    if A.ncols != len(x):
        raise ShapeError(f"cannot multiply {A.nrows}x{A.ncols} matrix by vector of length {len(x)}")
    F = A.field
    add, mul = F.add, F.mul
    out = []
    for r in A.rows():
        acc = F.zero
        for a, b in zip(r, x.entries):
            acc = add(acc, mul(a, b))
        out.append(acc)
    return Vector(F, tuple(out))


def vec_mat_mul(v: Vector, A: Matrix) -> Vector:
    """Row-vector product ``v^T A``."""
    if A.nrows != len(v):
        raise ShapeError(f"cannot multiply vector of length {len(v)} by {A.nrows}x{A.ncols} matrix")
    return mat_vec_mul(transpose(A), v)


def stack_rows(field: Field, rows: Sequence[Sequence]) -> Matrix:
    """Matrix whose rows are the given (already canonical) sequences."""
    if not rows:
        raise ShapeError("cannot stack zero rows")
    n = len(rows[0])
    return Matrix(field, len(rows), n, (x for r in rows for x in r))


# -- function representation ----------------------------------------------------

def to_func(A: Matrix) -> FuncMatrix:
    e, n = A.entries, A.ncols
    return FuncMatrix(A.field, A.nrows, A.ncols, lambda i, j: e[i * n + j])


def from_func(F: FuncMatrix) -> Matrix:
    f = F.lookup
    conv = F.field.convert
    return Matrix(F.field, F.nrows, F.ncols, (conv(f(i, j)) for i in range(F.nrows) for j in range(F.ncols)))


def func_interchange_rows(A: FuncMatrix, i: int, j: int) -> FuncMatrix:
    _check_row(A, i)
    _check_row(A, j)
    f = A.lookup

    def g(r, c):
        if r == i:
            return f(j, c)
        if r == j:
            return f(i, c)
        return f(r, c)

    return A._derive(g)


def func_mult_row(A: FuncMatrix, i: int, c) -> FuncMatrix:
    _check_row(A, i)
    f, mul = A.lookup, A.field.mul
    return A._derive(lambda r, col: mul(c, f(r, col)) if r == i else f(r, col))


def func_row_add(A: FuncMatrix, t: int, l: int, c) -> FuncMatrix:
    _check_row(A, t)
    _check_row(A, l)
    if t == l:
        raise ContractError("row_add requires two distinct rows")
    f, add, mul = A.lookup, A.field.add, A.field.mul
    return A._derive(lambda r, col: add(f(r, col), mul(c, f(l, col))) if r == t else f(r, col))
