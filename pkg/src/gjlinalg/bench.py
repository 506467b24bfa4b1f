"""Benchmark harness: seeded random matrices, timings and operation counts.

Random matrices come from numpy's PCG64 generator seeded with
``numpy.random.SeedSequence([seed, m, n, FIELD_CODE[field], 0])`` (stream 1 for
right-hand-side vectors) so the result
is a pure function of ``(m, n, field, seed)`` on every platform numpy
supports.  Distributions:

* ``gf2``: independent fair bits
* ``rat``: numerator uniform in ``[-10**4, 10**4]``, denominator uniform in
  ``[1, 100]``, reduced
* ``rat`` with ``big_int``: integers uniform in ``[-10**20, 10**20]``
* ``real``: uniform in ``[-1, 1)``

Every result is checked (rref shape, ``A A^-1 = I``, substitution) before its
timing is reported.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional, Sequence

import numpy as np
from gmpy2 import mpq

from .apps import inverse, rank
from .errors import DomainError
from .fields import Field, get_field
from .matrix import Matrix, Vector, identity, mat_mul, mat_vec_mul
from .rref import OpCounter, gauss_jordan, gauss_jordan_det, is_rref
from .solver import solve, verify_solution

OPERATIONS = ("rref", "det", "inverse", "solve")
FIELD_CODE = {"gf2": 0, "rat": 1, "real": 2}
BIG_INT_BOUND = 10**20
CSV_HEADER = ("operation", "field", "n", "median_seconds", "op_count")


def _rng(m: int, n: int, field_name: str, seed: int, stream: int = 0) -> np.random.Generator:
    ss = np.random.SeedSequence([seed, m, n, FIELD_CODE[field_name], stream])
    return np.random.Generator(np.random.PCG64(ss))


def _big_ints(rng: np.random.Generator, count: int, bound: int) -> list[int]:
    # Rejection sampling on 68-bit draws (two 34-bit halves) keeps it uniform.
    span = 2 * bound + 1
    bits = span.bit_length()
    half = (bits + 1) // 2
    out: list[int] = []
    while len(out) < count:
        hi, lo = rng.integers(0, 1 << half, size=2, dtype=np.uint64)
        x = ((int(hi) << half) | int(lo)) >> (2 * half - bits)
        if x < span:
            out.append(x - bound)
    return out


def random_entries(count: int, field: Field, rng: np.random.Generator, big_int: bool = False) -> list:
    name = field.name
    if name == "gf2":
        return [int(x) for x in rng.integers(0, 2, size=count)]
    if name == "rat":
        if big_int:
            return [mpq(x) for x in _big_ints(rng, count, BIG_INT_BOUND)]
        nums = rng.integers(-10**4, 10**4, size=count, endpoint=True)
        dens = rng.integers(1, 100, size=count, endpoint=True)
        return [mpq(int(p), int(q)) for p, q in zip(nums, dens)]
    if name == "real":
        return [float(x) for x in rng.uniform(-1.0, 1.0, size=count)]
    raise DomainError(f"unknown field {name!r}")


def random_matrix(m: int, n: int, field: Field | str, seed: int, big_int: bool = False) -> Matrix:
    """Deterministic random ``m x n`` matrix; see the module docstring for distributions."""
    F = get_field(field) if isinstance(field, str) else field
    if big_int and F.name != "rat":
        raise DomainError("big_int entries are only defined for the rat field")
    entries = random_entries(m * n, F, _rng(m, n, F.name, seed), big_int)
    return Matrix(F, m, n, entries)


def random_vector(n: int, field: Field | str, seed: int, big_int: bool = False) -> Vector:
    F = get_field(field) if isinstance(field, str) else field
    return Vector(F, tuple(random_entries(n, F, _rng(n, 1, F.name, seed, stream=1), big_int)))


@dataclass
class BenchSpec:
    operation: str
    field: str
    sizes: Sequence[int]
    reps: int = 3
    seed: int = 0
    big_int: bool = False
    count_ops: bool = True
    timeout: Optional[float] = None  # seconds per rep; a slower cell is reported as '-'
    eps: Optional[float] = None

    def __post_init__(self):
        if self.operation not in OPERATIONS:
            raise DomainError(f"unknown operation {self.operation!r}; expected one of {OPERATIONS}")
        if self.field not in FIELD_CODE:
            raise DomainError(f"unknown field {self.field!r}")
        sizes = list(self.sizes)
        if not sizes or any(n < 1 for n in sizes) or any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise DomainError(f"sizes must be positive and strictly increasing, got {sizes}")
        if self.reps < 1:
            raise DomainError("reps must be >= 1")


@dataclass
class BenchRow:
    operation: str
    field: str
    n: int
    median_seconds: Optional[float]
    op_count: Optional[int]
    rep_counts: list[int] = dc_field(default_factory=list)
    verified: bool = False

    def csv_fields(self) -> list[str]:
        return [
            self.operation,
            self.field,
            str(self.n),
            "-" if self.median_seconds is None else f"{self.median_seconds:.6f}",
            "-" if self.op_count is None else str(self.op_count),
        ]


class VerificationError(AssertionError):
    """A benchmarked computation produced a wrong answer."""


def _close_to_identity(M: Matrix) -> bool:
    F = M.field
    I = identity(F, M.nrows)
    if F.exact:
        return M == I
    return all(abs(a - b) <= 1e-8 for a, b in zip(M.entries, I.entries))


def _runner(op: str, A: Matrix, b: Optional[Vector]) -> tuple[Callable, Callable]:
    """Return ``(run(counter) -> result, check(result) -> bool)`` for one operation."""
    if op == "rref":
        return (lambda c: gauss_jordan(A, c)), (lambda r: is_rref(r.rref))
    if op == "det":
        return (lambda c: gauss_jordan_det(A, c)), (lambda r: is_rref(r.rref))
    if op == "inverse":
        def check_inv(B):
            if B is None:
                return rank(A) < A.nrows
            return _close_to_identity(mat_mul(A, B))
        return (lambda c: inverse(A, c)), check_inv
    if op == "solve":
        return (lambda c: solve(A, b, c)), (lambda s: verify_solution(A, b, s, trials=1).ok)
    raise DomainError(f"unknown operation {op!r}")


def bench_run(spec: BenchSpec, log: Optional[Callable[[str], None]] = None) -> list[BenchRow]:
    """Time ``spec.operation`` at each size; rows come back in size order."""
    F = get_field(spec.field, spec.eps)
    rows: list[BenchRow] = []
    timed_out = False
    for n in spec.sizes:
        if timed_out:
            rows.append(BenchRow(spec.operation, spec.field, n, None, None))
            continue
        A = random_matrix(n, n, F, spec.seed, spec.big_int)
        b = None
        if spec.operation == "solve":
            x0 = random_vector(n, F, spec.seed, spec.big_int)
            b = mat_vec_mul(A, x0)
        run, check = _runner(spec.operation, A, b)
        times: list[float] = []
        counts: list[int] = []
        result = None
        try:
            for _ in range(spec.reps):
                counter = OpCounter() if spec.count_ops else None
                t0 = time.perf_counter()
                result = run(counter)
                elapsed = time.perf_counter() - t0
                times.append(elapsed)
                if counter is not None:
                    counts.append(counter.total)
                if spec.timeout is not None and elapsed > spec.timeout:
                    timed_out = True
                    break
        except MemoryError:
            timed_out = True
        if timed_out:
            rows.append(BenchRow(spec.operation, spec.field, n, None, None, counts))
            if log:
                log(f"{spec.operation} {spec.field} n={n}: gave up (timeout or out of memory)")
            continue
        if not check(result):
            raise VerificationError(f"{spec.operation} over {spec.field} at n={n} failed verification")
        if counts and len(set(counts)) != 1:
            raise VerificationError(f"op counts differ across repetitions at n={n}: {counts}")
        row = BenchRow(
            spec.operation,
            spec.field,
            n,
            statistics.median(times),
            counts[0] if counts else None,
            counts,
            verified=True,
        )
        rows.append(row)
        if log:
            log(",".join(row.csv_fields()))
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())
    return buf.getvalue()


def loglog_slope(sizes: Sequence[int], counts: Sequence[int]) -> float:
    """Least-squares slope of ``log(count)`` against ``log(n)``."""
    slope, _ = np.polyfit(np.log(np.asarray(sizes, float)), np.log(np.asarray(counts, float)), 1)
    return float(slope)


def op_count(operation: str, A: Matrix) -> int:
    """Total elementary-operation count of one run of ``operation`` on ``A``."""
    counter = OpCounter()
    b = None
    if operation == "solve":
        b = Vector(A.field, (A.field.zero,) * A.nrows)
    run, _ = _runner(operation, A, b)
    run(counter)
    return counter.total
