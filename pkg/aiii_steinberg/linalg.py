"""Exact rational matrices over QQ, with elimination done by sympy's DomainMatrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import SteinbergValidationError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

Scalar = int | Fraction | str


def parse_rational(value: Scalar) -> Fraction:
    """Parse an integer, a Fraction or a string such as ``-3/4``.

    Raises:
        SteinbergValidationError: if the value is not an exact rational.

    """
    if isinstance(value, (bool, float)):
        msg = f"Refusing inexact or boolean matrix entry {value!r}"
        raise SteinbergValidationError(msg)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as ex:
        msg = f"Invalid rational entry {value!r}"
        raise SteinbergValidationError(msg) from ex


def _to_qq(value: Fraction) -> object:
    return QQ(value.numerator, value.denominator)


def _from_qq(value: object) -> Fraction:
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix of Fractions.

    Products, powers, ranks and kernels go through :attr:`domain_matrix`.
    """

    nrows: int
    ncols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        """Check the entries are rectangular."""
        if len(self.entries) != self.nrows or any(len(row) != self.ncols for row in self.entries):
            msg = f"Matrix entries do not match the declared shape {self.nrows}x{self.ncols}"
            raise SteinbergValidationError(msg)

    @classmethod
    def from_domain(cls, matrix: DomainMatrix) -> RationalMatrix:
        """Convert a DomainMatrix over QQ back."""
        nrows, ncols = matrix.shape
        if not nrows or not ncols:
            return cls.zeros(nrows, ncols)
        return cls(nrows, ncols, tuple(tuple(_from_qq(x) for x in row) for row in matrix.to_list()))

    @cached_property
    def domain_matrix(self) -> DomainMatrix:
        """The same matrix as a sympy DomainMatrix over QQ."""
        return DomainMatrix([[_to_qq(x) for x in row] for row in self.entries], self.shape, QQ)

    @property
    def is_empty(self) -> bool:
        """Return True if the matrix has no rows or no columns."""
        return not self.nrows or not self.ncols

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> RationalMatrix:
        """Build from nested rows; ``ncols`` is needed only when there are no rows."""
        entries = tuple(tuple(parse_rational(value) for value in row) for row in rows)
        width = len(entries[0]) if entries else (ncols or 0)
        return cls(len(entries), width, entries)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> RationalMatrix:
        """Zero matrix."""
        return cls(nrows, ncols, tuple((Fraction(0),) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        """Identity matrix."""
        return cls(
            n,
            n,
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], nrows: int) -> RationalMatrix:
        """Build from a list of column vectors of length ``nrows``."""
        cols = [[parse_rational(value) for value in column] for column in columns]
        return cls(
            nrows,
            len(cols),
            tuple(tuple(column[i] for column in cols) for i in range(nrows)),
        )

    @property
    def shape(self) -> tuple[int, int]:
        """Return (rows, columns)."""
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        """Return the entry at (row, column)."""
        i, j = key
        return self.entries[i][j]

    def _check_same_shape(self, other: RationalMatrix) -> None:
        if self.shape != other.shape:
            msg = f"Shape mismatch {self.shape} vs {other.shape}"
            raise SteinbergValidationError(msg)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        """Entrywise sum."""
        self._check_same_shape(other)
        return RationalMatrix(
            self.nrows,
            self.ncols,
            tuple(
                tuple(x + y for x, y in zip(row, other_row, strict=True))
                for row, other_row in zip(self.entries, other.entries, strict=True)
            ),
        )

    def __neg__(self) -> RationalMatrix:
        """Entrywise negation."""
        return self.scale(-1)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        """Entrywise difference."""
        return self + (-other)

    def scale(self, factor: Scalar) -> RationalMatrix:
        """Multiply every entry by ``factor``."""
        value = parse_rational(factor)
        return RationalMatrix(
            self.nrows, self.ncols, tuple(tuple(value * x for x in row) for row in self.entries)
        )

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        """Matrix product."""
        if self.ncols != other.nrows:
            msg = f"Cannot multiply {self.shape} by {other.shape}"
            raise SteinbergValidationError(msg)
        if self.is_empty or other.is_empty:
            return RationalMatrix.zeros(self.nrows, other.ncols)
        return RationalMatrix.from_domain(self.domain_matrix * other.domain_matrix)

    def power(self, exponent: int) -> RationalMatrix:
        """Return the ``exponent``-th power of a square matrix."""
        if self.nrows != self.ncols:
            msg = f"Only square matrices have powers, got {self.shape}"
            raise SteinbergValidationError(msg)
        if exponent == 0:
            return RationalMatrix.identity(self.nrows)
        if self.is_empty:
            return self
        return RationalMatrix.from_domain(self.domain_matrix**exponent)

    def transpose(self) -> RationalMatrix:
        """Transpose."""
        return RationalMatrix(
            self.ncols,
            self.nrows,
            tuple(tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
        )

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> RationalMatrix:
        """Return the block on the given row and column indices."""
        row_list = list(rows)
        col_list = list(cols)
        return RationalMatrix(
            len(row_list),
            len(col_list),
            tuple(tuple(self.entries[i][j] for j in col_list) for i in row_list),
        )

    def hstack(self, *others: RationalMatrix) -> RationalMatrix:
        """Concatenate columns."""
        for other in others:
            if other.nrows != self.nrows:
                msg = f"Cannot stack {self.shape} beside {other.shape}"
                raise SteinbergValidationError(msg)
        return RationalMatrix(
            self.nrows,
            self.ncols + sum(other.ncols for other in others),
            tuple(
                sum((other.entries[i] for other in others), self.entries[i]) for i in range(self.nrows)
            ),
        )

    def is_zero(self) -> bool:
        """Return True if every entry vanishes."""
        return all(x == 0 for row in self.entries for x in row)

    def is_strictly_upper_triangular(self) -> bool:
        """Return True if every entry on or below the diagonal vanishes."""
        return all(
            self.entries[i][j] == 0 for i in range(self.nrows) for j in range(min(i + 1, self.ncols))
        )

    def rank(self) -> int:
        """Rank over QQ."""
        return 0 if self.is_empty else self.domain_matrix.rank()

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """Return a basis of the right kernel."""
        if not self.ncols:
            return []
        if not self.nrows:
            return list(RationalMatrix.identity(self.ncols).entries)
        basis = self.domain_matrix.nullspace()
        if not basis.shape[0]:
            return []
        return [tuple(_from_qq(x) for x in row) for row in basis.to_list()]

    def to_json(self) -> list[list[int | str]]:
        """Return rows with integers kept as ints and other entries as ``a/b``."""
        return [[int(x) if x.denominator == 1 else str(x) for x in row] for row in self.entries]


def column_span_dimension(*blocks: RationalMatrix) -> int:
    """Dimension of the span of the columns of all ``blocks`` together."""
    first, *rest = blocks
    return first.hstack(*rest).rank()


def intersection_dimension(left: RationalMatrix, right: RationalMatrix) -> int:
    """Dimension of the intersection of two column spans.

    Uses dim(A ∩ B) = dim A + dim B - dim(A + B).
    """
    return left.rank() + right.rank() - column_span_dimension(left, right)


def standard_basis_columns(n: int, indices: Iterable[int]) -> RationalMatrix:
    """Columns e_i (0-based ``indices``) of the standard basis of Q^n."""
    columns = []
    for index in indices:
        column = [0] * n
        column[index] = 1
        columns.append(column)
    return RationalMatrix.from_columns(columns, n)
