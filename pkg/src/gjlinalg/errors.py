"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LinalgError(Exception):
    """Base class for all errors raised by gjlinalg."""


class ParseError(LinalgError, ValueError):
    """Malformed text. Carries the 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.message = message


class DomainError(LinalgError, ValueError):
    """A value that is well formed but not a member of the field (or a division by zero)."""


class ShapeError(LinalgError, ValueError):
    """Dimensions do not agree."""


class BoundsError(LinalgError, IndexError):
    """Row or column index out of range."""


class ContractError(LinalgError, ValueError):
    """A documented precondition was violated by the caller."""


class PivotNotFoundError(ContractError):
    """No nonzero entry at or below the requested row in the requested column."""
