"""Plain-text matrix, vector, basis and solution formats.

Matrix files::

    # comment lines start with '#'
    m n
    a11 a12 ... a1n
    ...
    am1 ... amn

Tokens are separated by spaces or tabs and parsed with the grammar of the
field chosen on the command line; the file itself does not name a field.
Vector files use the same layout with shape ``n 1``.
"""

from __future__ import annotations

from .apps import Basis
from .errors import LinalgError, ParseError
from .fields import Field
from .matrix import Matrix, Vector
from .solver import SolutionSet, Status


def _content_lines(text: str):
    """Yield ``(lineno, line)`` for non-comment lines, dropping trailing blank lines."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    for no, line in enumerate(lines, start=1):
        if line.lstrip().startswith("#"):
            continue
        yield no, line


def _tokens(line: str) -> list[tuple[int, str]]:
    """Split on spaces/tabs keeping 1-based start columns."""
    out = []
    i, n = 0, len(line)
    while i < n:
        if line[i] in " \t":
            i += 1
            continue
        j = i
        while j < n and line[j] not in " \t":
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def parse_matrix(text: str, field: Field) -> Matrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input, expected a header line 'm n'", line=1)
    hno, header = lines[0]
    toks = _tokens(header)
    if len(toks) != 2 or not all(t.isdigit() for _, t in toks):
        raise ParseError(f"bad header {header.strip()!r}, expected 'm n'", line=hno, column=1)
    m, n = (int(t) for _, t in toks)
    if m == 0 or n == 0:
        raise ParseError(f"matrix dimensions must be positive, got {m}x{n}", line=hno, column=1)
    body = lines[1:]
    if len(body) != m:
        where = body[-1][0] + 1 if body else hno + 1
        raise ParseError(f"expected {m} rows, got {len(body)}", line=where)
    entries = []
    for r, (no, line) in enumerate(body, start=1):
        toks = _tokens(line)
        if len(toks) != n:
            raise ParseError(f"row {r}: expected {n} tokens, got {len(toks)}", line=no)
        for col, tok in toks:
            try:
                entries.append(field.parse(tok))
            except ParseError as exc:
                raise ParseError(f"row {r}: {exc.message}", line=no,
                                 column=col + (exc.column or 1) - 1) from None
            except LinalgError as exc:
                raise ParseError(f"row {r}: {exc}", line=no, column=col) from None
    return Matrix(field, m, n, entries)


def parse_vector(text: str, field: Field) -> Vector:
    """Parse a vector stored as an ``n 1`` matrix."""
    M = parse_matrix(text, field)
    if M.ncols != 1:
        raise ParseError(f"vector file must have shape 'n 1', got '{M.nrows} {M.ncols}'", line=1)
    return Vector(field, M.entries)


def _row(field: Field, values) -> str:
    return " ".join(field.format(x) for x in values)


def format_matrix(A: Matrix) -> str:
    lines = [f"{A.nrows} {A.ncols}"]
    lines.extend(_row(A.field, r) for r in A.rows())
    return "\n".join(lines) + "\n"


def format_vector(v: Vector) -> str:
    lines = [f"{len(v)} 1"]
    lines.extend(v.field.format(x) for x in v)
    return "\n".join(lines) + "\n"


def format_basis(B: Basis) -> str:
    """``BASIS k n`` followed by ``k`` lines, one vector per line."""
    lines = [f"BASIS {len(B)} {B.ambient_dim}"]
    lines.extend(_row(B.field, v) for v in B)
    return "\n".join(lines) + "\n"


def format_solution(s: SolutionSet) -> str:
    """Either the single line ``INCONSISTENT`` or::

        UNIQUE | INFINITE
        x1 x2 ... xn          (particular solution)
        BASIS k n             (null space basis)
        ...
    """
    if s.status is Status.INCONSISTENT:
        return "INCONSISTENT\n"
    head = "UNIQUE" if s.status is Status.UNIQUE else "INFINITE"
    return f"{head}\n{_row(s.particular.field, s.particular)}\n" + format_basis(s.null_basis)


def parse_basis(text: str, field: Field) -> Basis:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty basis", line=1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "BASIS" or not parts[1].isdigit() or not parts[2].isdigit():
        raise ParseError(f"bad basis header {header!r}", line=no)
    k, n = int(parts[1]), int(parts[2])
    if len(lines) - 1 != k:
        raise ParseError(f"expected {k} basis vectors, got {len(lines) - 1}", line=no)
    vectors = []
    for vno, line in lines[1:]:
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} tokens, got {len(toks)}", line=vno)
        vectors.append(Vector(field, tuple(field.parse(t) for t in toks)))
    return Basis(field, tuple(vectors), n)
