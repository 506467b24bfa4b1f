"""Scalar fields: GF(2), arbitrary precision rationals and approximate reals.

A field object carries the arithmetic; elements are plain Python values
(``int`` in {0, 1}, ``gmpy2.mpq``, ``float``).  Keeping the
elements native avoids a wrapper allocation per arithmetic operation, which
dominates elimination cost in pure Python.

Besides scalar arithmetic every field exposes a small *row kernel*
(``pack_row``/``unpack_row``/``row_get``/``row_scale``/``row_axpy``) used by
the elimination engine.  The generic kernel works on lists; GF(2) packs a row
into a single integer bitmask so that adding one row to another is one XOR.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Callable, Sequence

from gmpy2 import mpq

from .errors import DomainError, ParseError

DEFAULT_EPS = 1e-12

_INT_RE = re.compile(r"[+-]?\d+")
_RAT_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")
_REAL_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


def _first_bad_position(text: str, allowed: str) -> int:
    """1-based column of the first character outside ``allowed`` (1 if none)."""
    for i, ch in enumerate(text):
        if ch not in allowed:
            return i + 1
    return 1


class Field:
    """Abstract field contract.

    Subclasses define ``name``, ``zero``, ``one`` and the scalar operations.
    Elements are immutable values; all operations are pure.
    """

    name: str = "abstract"
    exact: bool = True

    zero: Any
    one: Any

    # -- scalar arithmetic -------------------------------------------------
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        """Structural equality of two elements (exact, even for reals)."""
        return a == b

    def convert(self, value):
        """Coerce an int, Fraction, float or string into a canonical element."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    # -- row kernel --------------------------------------------------------
    def pack_row(self, values: Sequence):
        return list(values)

    def unpack_row(self, row, width: int) -> list:
        return list(row)

    def row_get(self, row, j: int):
        return row[j]

    def row_scale(self, row, c):
        mul = self.mul
        return [mul(x, c) for x in row]

    def row_axpy(self, dst, src, c):
        """Return ``dst + c * src``."""
        add, mul = self.add, self.mul
        return [add(x, mul(c, y)) for x, y in zip(dst, src)]

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


@dataclass(frozen=True, repr=False)
class GF2(Field):
    """The two element field; addition is XOR and multiplication is AND."""

    name = "gf2"
    zero = 0
    one = 1

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        return a & b

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise DomainError("division by zero in gf2")
        return 1

    def div(self, a, b):
        return a & self.inv(b)

    def convert(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, (int, Fraction)) and value in (0, 1):
            return int(value)
        raise DomainError(f"{value!r} is not an element of gf2")

    def parse(self, text: str):
        token = text.strip()
        if token in ("0", "1"):
            return int(token)
        if _INT_RE.fullmatch(token):
            raise DomainError(f"{token!r} is not an element of gf2 (expected 0 or 1)")
        bad = next((i for i, ch in enumerate(token) if ch not in "01"), 0)
        raise ParseError(f"invalid gf2 literal {token!r}", column=bad + 1)

    def random_element(self, rng):
        return rng.getrandbits(1)

    # Rows are integer bitmasks: bit j holds column j.
    def pack_row(self, values):
        bits = 0
        for j, v in enumerate(values):
            if v:
                bits |= 1 << j
        return bits

    def unpack_row(self, row, width):
        return [(row >> j) & 1 for j in range(width)]

    def row_get(self, row, j):
        return (row >> j) & 1

    def row_scale(self, row, c):
        return row if c else 0

    def row_axpy(self, dst, src, c):
        return dst ^ src if c else dst


@dataclass(frozen=True, repr=False)
class Rationals(Field):
    """Exact rationals, always reduced; backed by GMP via ``gmpy2.mpq``.

    ``mpq`` compares and hashes equal to :class:`fractions.Fraction`.
    """

    name = "rat"
    zero = mpq(0)
    one = mpq(1)

    def inv(self, a):
        if a == 0:
            raise DomainError("division by zero in rat")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DomainError("division by zero in rat")
        return a / b

    def convert(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, float) and not math.isfinite(value):
            raise DomainError(f"{value!r} is not a rational number")
        return mpq(value)

    def parse(self, text: str):
        token = text.strip()
        m = _RAT_RE.fullmatch(token)
        if m is None:
            raise ParseError(
                f"invalid rational literal {token!r}",
                column=_first_bad_position(token, "+-0123456789/"),
            )
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise DomainError(f"zero denominator in {token!r}")
        return mpq(int(num), int(den) if den is not None else 1)

    def format(self, a) -> str:
        # str(mpq) is already canonical p/q with q omitted when 1.
        return str(a)

    def random_element(self, rng):
        return mpq(rng.randint(-10**4, 10**4), rng.randint(1, 100))

    def row_scale(self, row, c):
        return [x * c for x in row]

    def row_axpy(self, dst, src, c):
        return [x + c * y if y else x for x, y in zip(dst, src)]


@dataclass(frozen=True, repr=False)
class Reals(Field):
    """Double precision reals; ``is_zero`` means ``abs(x) <= eps``.

    Not an exact field: :func:`field_laws_check` reports violations.
    """

    eps: float = DEFAULT_EPS
    name = "real"
    exact = False
    zero = 0.0
    one = 1.0

    def __post_init__(self):
        if not (self.eps >= 0 and math.isfinite(self.eps)):
            raise DomainError(f"epsilon must be a finite non-negative number, got {self.eps!r}")

    def inv(self, a):
        if a == 0:
            raise DomainError("division by zero in real")
        return self._check(1.0 / a)

    def div(self, a, b):
        if b == 0:
            raise DomainError("division by zero in real")
        return self._check(a / b)

    def is_zero(self, a) -> bool:
        return abs(a) <= self.eps

    @staticmethod
    def _check(x: float) -> float:
        if not math.isfinite(x):
            raise DomainError(f"non-finite real {x!r}")
        return x

    def convert(self, value):
        if isinstance(value, str):
            return self.parse(value)
        return self._check(float(value))

    def parse(self, text: str):
        token = text.strip()
        if not _REAL_RE.fullmatch(token):
            raise ParseError(
                f"invalid real literal {token!r}",
                column=_first_bad_position(token, "+-0123456789.eE"),
            )
        return self._check(float(token))

    def format(self, a) -> str:
        return repr(float(a))

    def random_element(self, rng):
        return rng.uniform(-1.0, 1.0)

    def random_spread_element(self, rng):
        # uniform(-1, 1) alone lands on a fixed-point grid where addition is
        # exact; varying the exponent exposes rounding.
        return rng.uniform(-1.0, 1.0) * 2.0 ** rng.randint(-20, 20)

    def __repr__(self) -> str:
        return f"Reals(eps={self.eps!r})"


FIELD_IDS = ("gf2", "rat", "real")


def get_field(name: str, eps: float | None = None) -> Field:
    """Look up a field by its identifier (``gf2``, ``rat`` or ``real``)."""
    if name == "gf2":
        return GF2()
    if name == "rat":
        return Rationals()
    if name == "real":
        return Reals(DEFAULT_EPS if eps is None else eps)
    raise DomainError(f"unknown field {name!r}; expected one of {', '.join(FIELD_IDS)}")


def parse_element(text: str, field: Field | str):
    """Parse one element under the field's literal grammar."""
    if isinstance(field, str):
        field = get_field(field)
    return field.parse(text)


# -- randomized field-law checks --------------------------------------------

@dataclass
class LawViolation:
    law: str
    witness: tuple


@dataclass
class LawReport:
    field: str
    samples: int
    violations: list[LawViolation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violated_laws(self) -> set[str]:
        return {v.law for v in self.violations}


def _laws(F: Field) -> dict[str, Callable[..., bool]]:
    eq, add, mul, neg = F.eq, F.add, F.mul, F.neg
    return {
        "add_commutative": lambda a, b, c: eq(add(a, b), add(b, a)),
        "mul_commutative": lambda a, b, c: eq(mul(a, b), mul(b, a)),
        "add_associative": lambda a, b, c: eq(add(add(a, b), c), add(a, add(b, c))),
        "mul_associative": lambda a, b, c: eq(mul(mul(a, b), c), mul(a, mul(b, c))),
        "distributive": lambda a, b, c: eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        "add_identity": lambda a, b, c: eq(add(a, F.zero), a),
        "mul_identity": lambda a, b, c: eq(mul(a, F.one), a),
        "add_inverse": lambda a, b, c: eq(add(a, neg(a)), F.zero),
        "mul_inverse": lambda a, b, c: F.is_zero(a) or eq(mul(a, F.inv(a)), F.one),
        "div_is_mul_inv": lambda a, b, c: F.is_zero(b) or eq(F.div(a, b), mul(a, F.inv(b))),
    }


def field_laws_check(field: Field | str, samples: int, seed: int) -> LawReport:
    """Check the field axioms on ``samples`` random triples.

    Equality is exact, so floating point reals are expected to fail some
    laws.  Violations are collected (one witness per occurrence), never raised.
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    F = get_field(field) if isinstance(field, str) else field
    rng = random.Random(seed)
    report = LawReport(F.name, samples)
    if not F.is_zero(F.zero) or F.is_zero(F.one):
        report.violations.append(LawViolation("zero_one_distinct", (F.zero, F.one)))
    laws = _laws(F)
    draw = getattr(F, "random_spread_element", F.random_element)
    for _ in range(samples):
        a, b, c = (draw(rng) for _ in range(3))
        for name, law in laws.items():
            if not law(a, b, c):
                report.violations.append(LawViolation(name, (a, b, c)))
    return report

