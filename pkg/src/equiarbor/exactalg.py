"""Exact rational linear algebra.

All scalars are ``fractions.Fraction``; no floating point appears anywhere
in a computation path.  Determinants use fraction-free (Bareiss) elimination
on a row-scaled integer copy of the matrix, solves use Gaussian elimination
over the rationals with a first-nonzero pivot rule, so identical inputs
always produce identical elimination traces.

Matrices are immutable; every function here is pure.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, SingularSystemError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

#: Soft size limit for dense matrices; beyond desk scale is a non-goal.
SIZE_LIMIT = 512


def format_rational(value: Rational) -> str:
    """Serialize as ``p/q``, or plain ``p`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse ``p`` or ``p/q`` with optional leading sign; q must be > 0."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if self.rows > SIZE_LIMIT or self.cols > SIZE_LIMIT:
            raise DimensionError(f"matrix exceeds the {SIZE_LIMIT} soft size limit")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational | int]]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: list[Rational] = []
        for row in rows:
            if len(row) != c:
                raise DimensionError("ragged rows")
            flat.extend(Fraction(v) for v in row)
        return cls(r, c, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(
            Fraction(1) if i == j else Fraction(0)
            for i in range(n) for j in range(n)
        ))

    def entry(self, i: int, j: int) -> Rational:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Rational, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Rational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def _bareiss_int(a: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix.  Mutates ``a``."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # Exact division is guaranteed by the Bareiss identity.
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(m: RationalMatrix) -> Rational:
    """Exact determinant via fraction-free elimination.

    Rows are scaled to integers first (tracking the scale factors), so the
    core elimination runs over arbitrary-precision integers only.
    """
    if not m.is_square:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a: list[list[int]] = []
    for i in range(n):
        row = m.row(i)
        lcm = 1
        for v in row:
            lcm = math.lcm(lcm, v.denominator)
        scale *= lcm
        a.append([int(v * lcm) for v in row])
    return Fraction(_bareiss_int(a), 1) / scale


def solve(a: RationalMatrix, b: Sequence[Rational | int]) -> tuple[Rational, ...]:
    """Solve ``a @ x == b`` exactly.

    Pivot choice is the first row with a nonzero pivot; the result is
    verified by multiplying back before it is returned.
    """
    if not a.is_square:
        raise DimensionError(f"solve with a {a.rows}x{a.cols} coefficient matrix")
    n = a.rows
    if len(b) != n:
        raise DimensionError(f"rhs length {len(b)} != {n}")
    aug = [list(a.row(i)) + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if aug[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularSystemError(f"no pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, n):
            factor = aug[r][col]
            if factor == 0:
                continue
            factor /= pivot
            for c in range(col, n + 1):
                aug[r][c] -= factor * aug[col][c]
    x: list[Rational] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = aug[i][n] - sum(aug[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / aug[i][i]
    for i in range(n):
        if sum(a.entry(i, j) * x[j] for j in range(n)) != Fraction(b[i]):
            raise SingularSystemError("back-substitution check failed")
    return tuple(x)


def invert(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination with all unit columns."""
    if not m.is_square:
        raise DimensionError(f"inverse of a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if aug[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularSystemError(f"no pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        if pivot != 1:
            aug[col] = [v / pivot for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [rv - factor * cv for rv, cv in zip(aug[r], aug[col])]
    return RationalMatrix.from_rows([row[n:] for row in aug])


def matvec(m: RationalMatrix, v: Sequence[Rational | int]) -> tuple[Rational, ...]:
    if len(v) != m.cols:
        raise DimensionError(f"vector length {len(v)} != {m.cols}")
    return tuple(
        sum((m.entry(i, j) * Fraction(v[j]) for j in range(m.cols)), Fraction(0))
        for i in range(m.rows)
    )


def rationals(values: Iterable[Rational | int | str]) -> tuple[Rational, ...]:
    """Coerce a mixed iterable to exact rationals (strings via the parser)."""
    out: list[Rational] = []
    for v in values:
        out.append(parse_rational(v) if isinstance(v, str) else Fraction(v))
    return tuple(out)
