"""General solution of ``A x = b``.

The tracked elimination gives ``P`` with ``P A = rref(A)``.  With ``c = P b``
the system is inconsistent exactly when some ``c[i]`` with ``i >= rank`` is
nonzero.  Otherwise a particular solution puts ``c[j]`` at the ``j``-th pivot
column and zero at every free column, and the homogeneous part is the null
space basis.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .apps import Basis, basis_null_space, rank
from .errors import ShapeError
from .matrix import Matrix, Vector, mat_vec_mul
from .rref import OpCounter, gauss_jordan_tracked


class Status(enum.Enum):
    INCONSISTENT = "inconsistent"
    UNIQUE = "unique"
    INFINITE = "infinite"


@dataclass(frozen=True)
class SolutionSet:
    status: Status
    particular: Optional[Vector] = None
    null_basis: Optional[Basis] = None

    @property
    def consistent(self) -> bool:
        return self.status is not Status.INCONSISTENT

    @property
    def approximate(self) -> bool:
        return self.particular is not None and not self.particular.field.exact


def _check_shapes(A: Matrix, b: Vector) -> None:
    if len(b) != A.nrows:
        raise ShapeError(f"right-hand side has length {len(b)}, matrix has {A.nrows} rows")


def solve(A: Matrix, b: Vector, counter: Optional[OpCounter] = None) -> SolutionSet:
    _check_shapes(A, b)
    F = A.field
    t = gauss_jordan_tracked(A, counter)
    c = mat_vec_mul(t.P, b)
    if any(not F.is_zero(c[i]) for i in range(t.rank, A.nrows)):
        return SolutionSet(Status.INCONSISTENT)
    x = [F.zero] * A.ncols
    for j, col in enumerate(t.pivot_cols):
        x[col] = c[j]
    kernel = basis_null_space(A, counter)
    status = Status.UNIQUE if t.rank == A.ncols else Status.INFINITE
    return SolutionSet(status, Vector(F, tuple(x)), kernel)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))


APPROX_RESIDUAL_TOL = 1e-8


def _residual_zero(F, v: Vector) -> bool:
    if F.exact:
        return all(F.is_zero(x) for x in v)
    return max(abs(x) for x in v) <= APPROX_RESIDUAL_TOL


def verify_solution(
    A: Matrix, b: Vector, s: SolutionSet, trials: int = 5, seed: int = 0
) -> VerifyReport:
    """Check a solution set by substitution; violations are report entries.

    Over approximate reals residuals only need to be within ``1e-8``.
    """
    _check_shapes(A, b)
    F = A.field
    rep = VerifyReport()
    augmented = Matrix(F, A.nrows, A.ncols + 1, (x for i, r in enumerate(A.rows()) for x in (*r, b[i])))
    consistent = rank(A) == rank(augmented)
    rep.add("consistency", consistent == s.consistent,
            f"augmented-rank test says {'consistent' if consistent else 'inconsistent'}, "
            f"solution says {s.status.value}")
    if not s.consistent:
        rep.add("shape", s.particular is None and s.null_basis is None)
        return rep

    shape_ok = (
        s.particular is not None
        and s.null_basis is not None
        and len(s.particular) == A.ncols
        and (s.status is Status.UNIQUE) == (len(s.null_basis) == 0)
    )
    rep.add("shape", shape_ok)
    if not shape_ok:
        return rep

    r = mat_vec_mul(A, s.particular)
    diff = Vector(F, tuple(F.sub(x, y) for x, y in zip(r.entries, b.entries)))
    rep.add("residual", _residual_zero(F, diff), f"A*x - b = {[F.format(x) for x in diff]}")

    bad = [i for i, v in enumerate(s.null_basis) if not _residual_zero(F, mat_vec_mul(A, v))]
    rep.add("homogeneous", not bad, f"vectors not in kernel: {bad}" if bad else "")

    expected = A.ncols - rank(A)
    rep.add("kernel_dimension", len(s.null_basis) == expected,
            f"{len(s.null_basis)} basis vectors, nullity {expected}")

    rng = random.Random(seed)
    combos_ok = True
    for _ in range(trials if len(s.null_basis) else 0):
        x = list(s.particular.entries)
        for v in s.null_basis:
            lam = F.random_element(rng)
            x = [F.add(xi, F.mul(lam, vi)) for xi, vi in zip(x, v.entries)]
        ax = mat_vec_mul(A, Vector(F, tuple(x)))
        if not _residual_zero(F, Vector(F, tuple(F.sub(p, q) for p, q in zip(ax.entries, b.entries)))):
            combos_ok = False
            break
    rep.add("combinations", combos_ok)
    return rep
