"""Command line interface.

Exit codes: 0 on success, 1 when the requested object does not exist
(``inverse`` of a singular matrix) or ``verify`` finds a failed check,
2 on usage or input errors.  An inconsistent system is a normal answer for
``solve`` and exits 0.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .apps import det, fundamental_subspaces, inverse, is_linearly_independent, nullity, rank
from .bench import BenchSpec, OPERATIONS, bench_run, rows_to_csv
from .errors import LinalgError
from .fields import FIELD_IDS, Field, get_field
from .fileformat import format_basis, format_matrix, format_solution, parse_matrix, parse_vector
from .matrix import Matrix, identity, mat_mul, mat_vec_mul, transpose, vec_mat_mul
from .rref import OpCounter, gauss_jordan, gauss_jordan_tracked, is_rref
from .solver import solve, verify_solution

EXIT_OK, EXIT_ABSENT, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive_float(text: str) -> float:
    x = float(text)
    if not x >= 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text!r}")
    return x


def _sizes(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gjlinalg", description="Gauss-Jordan linear algebra over gf2, rat and real.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def matrix_command(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--field", choices=FIELD_IDS, required=True)
        p.add_argument("--input", required=True, metavar="FILE", help="matrix file ('-' for stdin)")
        p.add_argument("--eps", type=_positive_float, default=None,
                       help="zero threshold for the real field (default 1e-12)")
        p.add_argument("--output", metavar="FILE", default=None, help="default: stdout")
        p.add_argument("--count-ops", action="store_true",
                       help="append a '# ops ...' line with elementary-operation counts")
        return p

    p = matrix_command("rref", "reduced row echelon form")
    p.add_argument("--track", action="store_true", help="also print P with P*A = rref")
    matrix_command("rank", "rank of the matrix")
    matrix_command("det", "determinant of a square matrix")
    matrix_command("inverse", "inverse of a square matrix (SINGULAR if none)")
    p = matrix_command("solve", "general solution of A x = b")
    p.add_argument("--rhs", required=True, metavar="FILE", help="right-hand side as an 'n 1' matrix file")
    matrix_command("bases", "bases of the row, column, null and left null spaces")
    p = matrix_command("verify", "recompute everything and check the invariants")
    p.add_argument("--rhs", metavar="FILE", default=None, help="also verify the solution of A x = b")

    p = sub.add_parser("bench", help="time an operation on seeded random matrices")
    p.add_argument("--op", choices=OPERATIONS, required=True)
    p.add_argument("--field", choices=FIELD_IDS, required=True)
    p.add_argument("--sizes", type=_sizes, required=True, metavar="A,B,C")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", metavar="FILE", default=None, help="write CSV here instead of stdout")
    p.add_argument("--big-int", action="store_true", help="rat entries are integers up to 10**20")
    p.add_argument("--eps", type=_positive_float, default=None)
    p.add_argument("--timeout", type=float, default=None, metavar="SECONDS",
                   help="per-repetition budget; slower cells and larger sizes are reported as '-'")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _approx_note(F: Field) -> str:
    return "" if F.exact else f"# approximate (eps={F.eps!r})\n"


def _close(A: Matrix, B: Matrix, tol: float = 1e-8) -> bool:
    if A.field.exact:
        return A == B
    return A.shape == B.shape and all(abs(x - y) <= tol for x, y in zip(A.entries, B.entries))


def _verify(A: Matrix, rhs_text: Optional[str]) -> tuple[list[tuple[str, bool, str]], bool]:
    F = A.field
    results: list[tuple[str, bool, str]] = []

    def check(name, ok, detail=""):
        results.append((name, bool(ok), detail))

    g = gauss_jordan(A)
    check("is_rref", is_rref(g.rref))
    check("idempotent", _close(gauss_jordan(g.rref).rref, g.rref))
    t = gauss_jordan_tracked(A)
    check("tracking", _close(mat_mul(t.P, A), t.rref) and t.rank == g.rank)
    check("rank_nullity", rank(A) + nullity(A) == A.ncols)
    if A.is_square:
        check("det_transpose", F.is_zero(F.sub(det(A), det(transpose(A)))) if F.exact
              else abs(det(A) - det(transpose(A))) <= 1e-8 * max(1.0, abs(det(A))))
        B = inverse(A)
        if B is None:
            check("inverse", g.rank < A.ncols, "reported singular")
        else:
            I = identity(F, A.nrows)
            check("inverse", _close(mat_mul(A, B), I) and _close(mat_mul(B, A), I))
    bases = fundamental_subspaces(A)
    r = g.rank
    check("row_space", len(bases.row) == r and is_linearly_independent(F, bases.row))
    check("col_space", len(bases.col) == r and is_linearly_independent(F, bases.col))
    tol = (lambda x: F.is_zero(x)) if F.exact else (lambda x: abs(x) <= 1e-8)
    check("null_space", len(bases.null) == A.ncols - r
          and all(all(tol(x) for x in mat_vec_mul(A, v)) for v in bases.null)
          and is_linearly_independent(F, bases.null))
    check("left_null_space", len(bases.left_null) == A.nrows - r
          and all(all(tol(x) for x in vec_mat_mul(v, A)) for v in bases.left_null)
          and is_linearly_independent(F, bases.left_null))
    if rhs_text is not None:
        b = parse_vector(rhs_text, F)
        rep = verify_solution(A, b, solve(A, b))
        for c in rep.checks:
            check(f"solve.{c.name}", c.ok, c.detail)
    return results, all(ok for _, ok, _ in results)


def _run(args) -> tuple[str, int]:
    if args.command == "bench":
        spec = BenchSpec(args.op, args.field, args.sizes, args.reps, args.seed,
                         big_int=args.big_int, timeout=args.timeout, eps=args.eps)
        rows = bench_run(spec, log=lambda msg: print(msg, file=sys.stderr))
        text = rows_to_csv(rows)
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(text)
            return "", EXIT_OK
        return text, EXIT_OK

    F = get_field(args.field, args.eps)
    A = parse_matrix(_read(args.input), F)
    counter = OpCounter() if args.count_ops else None
    code = EXIT_OK
    cmd = args.command

    if cmd == "rref":
        if args.track:
            t = gauss_jordan_tracked(A, counter)
            out = (f"{_approx_note(F)}# P\n{format_matrix(t.P)}# rref (rank {t.rank})\n"
                   f"{format_matrix(t.rref)}")
        else:
            g = gauss_jordan(A, counter)
            out = f"{_approx_note(F)}{format_matrix(g.rref)}"
    elif cmd == "rank":
        out = f"{rank(A, counter)}\n"
    elif cmd == "det":
        out = f"{F.format(det(A, counter))}\n"
    elif cmd == "inverse":
        B = inverse(A, counter)
        if B is None:
            out, code = "SINGULAR\n", EXIT_ABSENT
        else:
            out = f"{_approx_note(F)}{format_matrix(B)}"
    elif cmd == "solve":
        b = parse_vector(_read(args.rhs), F)
        out = _approx_note(F) + format_solution(solve(A, b, counter))
    elif cmd == "bases":
        bases = fundamental_subspaces(A)
        parts = [_approx_note(F)]
        for label, basis in (("row space", bases.row), ("column space", bases.col),
                             ("null space", bases.null), ("left null space", bases.left_null)):
            parts.append(f"# {label}\n{format_basis(basis)}")
        out = "".join(parts)
    elif cmd == "verify":
        results, ok = _verify(A, _read(args.rhs) if args.rhs else None)
        lines = [f"{'PASS' if passed else 'FAIL'} {name}" + (f": {detail}" if detail and not passed else "")
                 for name, passed, detail in results]
        out = "\n".join(lines) + "\n"
        code = EXIT_OK if ok else EXIT_ABSENT
    else:  # pragma: no cover - argparse rejects unknown commands
        raise AssertionError(cmd)

    if counter is not None:
        out += f"# ops {counter.summary()}\n"
    return out, code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        out, code = _run(args)
    except (LinalgError, OSError) as exc:
        print(f"gjlinalg {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if out:
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    return code


cli_main = main


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
