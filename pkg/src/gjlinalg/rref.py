"""Gauss-Jordan elimination to reduced row echelon form.

The algorithm walks the columns left to right keeping a pivot row counter
``l``.  In column ``k`` it looks for the first row ``i >= l`` with a nonzero
entry; if there is one it swaps rows ``i`` and ``l``, scales row ``l`` so the
pivot becomes 1, clears column ``k`` in every other row (above and below) and
advances ``l``.  Pivot choice is positional, never magnitude based.

Three entry points share one engine:

* :func:`gauss_jordan` -- rref, rank, pivot columns.
* :func:`gauss_jordan_tracked` -- additionally the matrix ``P`` with ``P A = rref``.
* :func:`gauss_jordan_det` -- additionally the scalar ``b`` with ``det A = b det(rref)``.

:func:`gauss_jordan_reference` re-runs the same algorithm on
:class:`~gjlinalg.matrix.FuncMatrix` lookups; it is slow and exists so the dense
engine can be checked against a representation-independent definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import reduce
from typing import Callable, Optional

from .errors import PivotNotFoundError, ShapeError
from .fields import Field
from .matrix import (
    FuncMatrix,
    Matrix,
    _check_row,
    from_func,
    func_interchange_rows,
    func_mult_row,
    interchange_rows,
    mult_row,
    row_add,
    to_func,
)


@dataclass
class OpCounter:
    """Counts elementary operations performed by the elimination engine.

    ``entry_ops`` counts field multiplications and additions: a row scaling
    of width ``w`` costs ``w``, a row addition ``2w``.
    """

    interchanges: int = 0
    scalings: int = 0
    row_adds: int = 0
    entry_ops: int = 0

    @property
    def total(self) -> int:
        return self.interchanges + self.scalings + self.row_adds + self.entry_ops

    def summary(self) -> str:
        return (
            f"interchanges={self.interchanges} scalings={self.scalings} "
            f"row_adds={self.row_adds} entry_ops={self.entry_ops} total={self.total}"
        )


@dataclass(frozen=True)
class RrefResult:
    rref: Matrix
    rank: int
    pivot_cols: tuple[int, ...]


@dataclass(frozen=True)
class TrackedRref:
    P: Matrix
    rref: Matrix
    rank: int
    pivot_cols: tuple[int, ...]


@dataclass(frozen=True)
class DetTrace:
    b: object
    rref: Matrix
    rank: int = 0
    pivot_cols: tuple[int, ...] = dc_field(default=())


# Callback signature for step tracing: (operation name, b, working rows).
StepHook = Callable[[str, object, list], None]


def _eliminate(
    F: Field,
    rows: list,
    search_cols: int,
    width: int,
    counter: Optional[OpCounter] = None,
    on_step: Optional[StepHook] = None,
):
    """Run the elimination in place on packed ``rows``.

    Only columns ``0 .. search_cols-1`` are pivot candidates; row operations
    act on the full ``width`` (this is how ``P`` rides along to the right of
    ``A`` in the tracked variant).  Returns ``(pivot_cols, b)``.
    """
    m = len(rows)
    get, is_zero, eq = F.row_get, F.is_zero, F.eq
    scale, axpy, zero = F.row_scale, F.row_axpy, F.zero
    b = F.one
    pivots: list[int] = []
    l = 0
    for k in range(search_cols):
        if l == m:
            break
        i = l
        while i < m and is_zero(get(rows[i], k)):
            i += 1
        if i == m:
            continue
        if i != l:
            rows[i], rows[l] = rows[l], rows[i]
            b = F.neg(b)
            if counter is not None:
                counter.interchanges += 1
            if on_step is not None:
                on_step("interchange", b, rows)
        p = get(rows[l], k)
        pivot_row = rows[l] = scale(rows[l], F.inv(p))
        b = F.mul(b, p)
        if counter is not None:
            counter.scalings += 1
            counter.entry_ops += width
        if on_step is not None:
            on_step("scale", b, rows)
        for t in range(m):
            if t == l:
                continue
            c = get(rows[t], k)
            # Adding a zero multiple is the identity, so it is skipped.
            if eq(c, zero):
                continue
            rows[t] = axpy(rows[t], pivot_row, F.neg(c))
            if counter is not None:
                counter.row_adds += 1
                counter.entry_ops += 2 * width
            if on_step is not None:
                on_step("row_add", b, rows)
        pivots.append(k)
        l += 1
    return pivots, b


def _pack(A: Matrix, extra: Optional[Callable[[int], list]] = None) -> list:
    F = A.field
    if extra is None:
        return [F.pack_row(r) for r in A.rows()]
    return [F.pack_row(list(r) + extra(i)) for i, r in enumerate(A.rows())]


def _unpack(F: Field, rows: list, width: int, lo: int, hi: int) -> tuple:
    out = []
    for r in rows:
        out.extend(F.unpack_row(r, width)[lo:hi])
    return tuple(out)


def snap_zeros(A: Matrix) -> Matrix:
    """Replace every entry the field considers zero by an exact zero."""
    F = A.field
    return Matrix._trusted(F, A.nrows, A.ncols, tuple(F.zero if F.is_zero(x) else x for x in A.entries))


def gauss_jordan(A: Matrix, counter: Optional[OpCounter] = None, snap: bool = False) -> RrefResult:
    """Reduced row echelon form of ``A`` together with its rank and pivot columns.

    ``snap`` replaces near-zero entries by exact zeros afterwards; it only
    matters for approximate reals.
    """
    F = A.field
    rows = _pack(A)
    pivots, _ = _eliminate(F, rows, A.ncols, A.ncols, counter)
    R = Matrix._trusted(F, A.nrows, A.ncols, _unpack(F, rows, A.ncols, 0, A.ncols))
    if snap:
        R = snap_zeros(R)
    return RrefResult(R, len(pivots), tuple(pivots))


def gauss_jordan_tracked(A: Matrix, counter: Optional[OpCounter] = None) -> TrackedRref:
    """Eliminate on the pair ``(I_m, A)``; returns ``P`` with ``P A = rref``."""
    F = A.field
    m, n = A.shape
    z, o = F.zero, F.one

    def unit(i):
        return [o if j == i else z for j in range(m)]

    rows = _pack(A, unit)
    width = n + m
    pivots, _ = _eliminate(F, rows, n, width, counter)
    R = Matrix._trusted(F, m, n, _unpack(F, rows, width, 0, n))
    P = Matrix._trusted(F, m, m, _unpack(F, rows, width, n, width))
    return TrackedRref(P, R, len(pivots), tuple(pivots))


def gauss_jordan_det(
    A: Matrix,
    counter: Optional[OpCounter] = None,
    trace: Optional[Callable[[object, Matrix], None]] = None,
) -> DetTrace:
    """Eliminate on the pair ``(1, A)``.

    A genuine interchange negates ``b``, scaling the pivot row by ``1/p``
    multiplies ``b`` by ``p`` and row additions leave ``b`` alone, so
    ``det A = b * det(current)`` holds after every step.  ``trace`` (if given)
    is called as ``trace(b, current_matrix)`` before the first step and after
    each elementary operation.
    """
    if not A.is_square:
        raise ShapeError(f"determinant needs a square matrix, got {A.nrows}x{A.ncols}")
    F = A.field
    n = A.ncols
    rows = _pack(A)

    def hook(_name, b, cur):
        trace(b, Matrix._trusted(F, n, n, _unpack(F, cur, n, 0, n)))

    if trace is not None:
        trace(F.one, A)
    pivots, b = _eliminate(F, rows, n, n, counter, hook if trace is not None else None)
    R = Matrix._trusted(F, n, n, _unpack(F, rows, n, 0, n))
    return DetTrace(b, R, len(pivots), tuple(pivots))


def _first_nonzero_at_or_below(F: Field, col, l: int, m: int):
    for n in range(l, m):
        if not F.is_zero(col(n)):
            return n
    return None


def gj_pivot_step(A: Matrix, l: int, k: int) -> Matrix:
    """One pivot step on dense storage, built from the public row operations."""
    _check_row(A, l)
    if not 0 <= k < A.ncols:
        raise ShapeError(f"column {k} out of range for {A.ncols} columns")
    F = A.field
    i = _first_nonzero_at_or_below(F, lambda r: A[r, k], l, A.nrows)
    if i is None:
        raise PivotNotFoundError(f"no nonzero entry in column {k} at or below row {l}")
    swapped = interchange_rows(A, i, l)
    B = mult_row(swapped, l, F.inv(swapped[l, k]))
    for t in range(A.nrows):
        if t != l:
            B = row_add(B, t, l, F.neg(swapped[t, k]))
    return B


# -- reference semantics on lookup functions --------------------------------

def func_gj_pivot_step(A: FuncMatrix, l: int, k: int) -> FuncMatrix:
    """Pivot step expressed as a new lookup function.

    Row ``l`` of the result is the scaled pivot row; every other row ``t`` is
    ``row t + (-swapped[t, k]) * row l``, evaluated pointwise.
    """
    _check_row(A, l)
    F = A.field
    i = _first_nonzero_at_or_below(F, lambda r: A(r, k), l, A.nrows)
    if i is None:
        raise PivotNotFoundError(f"no nonzero entry in column {k} at or below row {l}")
    swapped = func_interchange_rows(A, i, l)
    scaled = func_mult_row(swapped, l, F.inv(swapped(l, k)))
    add, mul, neg = F.add, F.mul, F.neg

    def entry(t, j):
        if t == l:
            return scaled(l, j)
        return add(scaled(t, j), mul(neg(swapped(t, k)), scaled(l, j)))

    return scaled._derive(entry)


def gauss_jordan_reference(A: Matrix | FuncMatrix) -> RrefResult:
    """Gauss-Jordan as a fold of pivot steps over the column indices."""
    M0 = to_func(A) if isinstance(A, Matrix) else A
    F = M0.field
    m = M0.nrows

    def step(state, k):
        l, M, piv = state
        if l < m and _first_nonzero_at_or_below(F, lambda r: M(r, k), l, m) is not None:
            return l + 1, func_gj_pivot_step(M, l, k), piv + (k,)
        return state

    l, M, piv = reduce(step, range(M0.ncols), (0, M0, ()))
    return RrefResult(from_func(M), l, piv)


def is_rref(A: Matrix) -> bool:
    """True iff ``A`` is in reduced row echelon form (zero tests use the field's threshold)."""
    F = A.field
    is_zero = F.is_zero
    last_lead = -1
    seen_zero_row = False
    for i, r in enumerate(A.rows()):
        lead = next((j for j, x in enumerate(r) if not is_zero(x)), None)
        if lead is None:
            seen_zero_row = True
            continue
        if seen_zero_row or lead <= last_lead:
            return False
        if not is_zero(F.sub(r[lead], F.one)):
            return False
        col = A.col(lead)
        if any(not is_zero(col[t]) for t in range(A.nrows) if t != i):
            return False
        last_lead = lead
    return True
