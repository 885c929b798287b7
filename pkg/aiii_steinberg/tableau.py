"""Partitions, standard tableaux, RS insertion, jeu de taquin and signed diagrams."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cache, reduce
from math import factorial, prod
from typing import TYPE_CHECKING

from loguru import logger

from .const import MAX_TABLEAU_SIZE, MINUS, PLUS
from .exceptions import (
    SteinbergInconsistencyError,
    SteinbergRefusalError,
    SteinbergValidationError,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts. The empty partition is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Normalise the parts and check they form a partition."""
        parts = tuple(int(part) for part in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(part < 1 for part in parts):
            msg = f"Partition parts must be positive, got {parts}"
            raise SteinbergValidationError(msg)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            msg = f"Partition parts must be weakly decreasing, got {parts}"
            raise SteinbergValidationError(msg)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        """Build a partition from its parts, dropping trailing zeros."""
        return cls(tuple(part for part in parts if part != 0))

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(self.parts)

    def __len__(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        """Iterate over the parts."""
        return iter(self.parts)

    def part(self, index: int) -> int:
        """Return the part at ``index``, zero past the last row."""
        return self.parts[index] if index < len(self.parts) else 0

    def conjugate(self) -> Partition:
        """Transpose the Young diagram."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for part in self.parts if part > col) for col in range(self.parts[0]))
        )

    def contains(self, other: Partition) -> bool:
        """Return True if ``other`` fits inside this diagram cellwise."""
        return len(other) <= len(self) and all(
            other.part(i) <= self.part(i) for i in range(len(other))
        )

    def dominates(self, other: Partition) -> bool:
        """Dominance order on partitions of the same size."""
        if self.size != other.size:
            return False
        mine = 0
        theirs = 0
        for i in range(max(len(self), len(other))):
            mine += self.part(i)
            theirs += other.part(i)
            if mine < theirs:
                return False
        return True

    def first_columns_count(self, c: int) -> int:
        """Number of boxes in the first ``c`` columns."""
        return sum(min(part, c) for part in self.parts)

    def to_json(self) -> list[int]:
        """Return the JSON form, a list of parts."""
        return list(self.parts)

    def __str__(self) -> str:
        """Return the parts as ``(2,1,1)``."""
        return "(" + ",".join(str(part) for part in self.parts) + ")"


def first_columns_count(partition: Partition, c: int) -> int:
    """Return n_c(partition), the number of boxes in its first ``c`` columns."""
    return partition.first_columns_count(c)


def is_column_strip(inner: Partition, outer: Partition) -> bool:
    """Return True if outer/inner is a skew diagram with at most one box per row."""
    if not outer.contains(inner):
        return False
    return all(outer.part(i) - inner.part(i) <= 1 for i in range(len(outer)))


@cache
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result: list[tuple[int, ...]] = []
    for first in range(min(n, largest), 0, -1):
        result.extend((first, *rest) for rest in _partitions(n - first, first))
    return tuple(result)


def partitions(n: int) -> list[Partition]:
    """Return all partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        msg = f"Cannot partition a negative integer {n}"
        raise SteinbergValidationError(msg)
    return [Partition(parts) for parts in _partitions(n, n)]


def count_standard_tableaux(shape: Partition) -> int:
    """Count standard tableaux of ``shape`` with the hook length formula."""
    conjugate = shape.conjugate()
    hooks = (
        (shape.part(i) - j) + (conjugate.part(j) - i) - 1
        for i in range(len(shape))
        for j in range(shape.part(i))
    )
    return factorial(shape.size) // prod(hooks)


@dataclass(frozen=True)
class StandardTableau:
    """Straight-shape tableau with distinct integers increasing along rows and columns.

    Entries need not be 1..n and may be negative.
    """

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        """Normalise the rows and check standardness."""
        rows = tuple(tuple(int(entry) for entry in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(not row for row in rows):
            msg = f"Tableau rows must be nonempty, got {rows}"
            raise SteinbergValidationError(msg)
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            msg = f"Tableau must have straight shape, got row lengths {[len(r) for r in rows]}"
            raise SteinbergValidationError(msg)
        entries = [entry for row in rows for entry in row]
        if len(set(entries)) != len(entries):
            msg = f"Tableau entries must be distinct, got {rows}"
            raise SteinbergValidationError(msg)
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                if j > 0 and row[j - 1] >= entry:
                    msg = f"Row {i} of {rows} is not increasing"
                    raise SteinbergValidationError(msg)
                if i > 0 and rows[i - 1][j] >= entry:
                    msg = f"Column {j} of {rows} is not increasing"
                    raise SteinbergValidationError(msg)

    @classmethod
    def column(cls, entries: Iterable[int]) -> StandardTableau:
        """Single-column tableau of the sorted ``entries``, written [S] for a set S."""
        return cls(tuple((entry,) for entry in sorted(entries)))

    @classmethod
    def row(cls, entries: Iterable[int]) -> StandardTableau:
        """Single-row tableau of the sorted ``entries``."""
        ordered = tuple(sorted(entries))
        return cls((ordered,) if ordered else ())

    @property
    def shape(self) -> Partition:
        """Row lengths as a partition."""
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def entries(self) -> frozenset[int]:
        """Set of entries."""
        return frozenset(entry for row in self.rows for entry in row)

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(len(row) for row in self.rows)

    def to_json(self) -> list[list[int]]:
        """Return the JSON form, a list of rows."""
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        """Return rows separated by slashes, e.g. ``1 3/2/4``."""
        return "/".join(" ".join(str(entry) for entry in row) for row in self.rows)


@dataclass(frozen=True)
class SkewTableau:
    """Filling of outer/inner, given as the filled part of each row.

    Row ``i`` occupies columns ``inner.part(i)`` up to the end of the row.
    """

    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        """Check the outer shape is a partition containing the inner one."""
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(self.inner) > len(rows):
            msg = f"Inner shape {self.inner} has more rows than the skew filling"
            raise SteinbergValidationError(msg)
        outer = [self.inner.part(i) + len(row) for i, row in enumerate(rows)]
        if any(outer[i] < outer[i + 1] for i in range(len(outer) - 1)):
            msg = f"Outer shape {outer} is not a partition"
            raise SteinbergValidationError(msg)

    def _grid(self) -> list[list[int | None]]:
        return [[None] * self.inner.part(i) + list(row) for i, row in enumerate(self.rows)]

    def rectify(self) -> StandardTableau:
        """Rectify by jeu de taquin.

        Slides always start at the smallest inner corner in (row, column) order.
        """
        grid = self._grid()
        while True:
            corner = _smallest_inner_corner(grid)
            if corner is None:
                break
            _slide(grid, *corner)
        return StandardTableau(tuple(tuple(row) for row in grid if row))  # type: ignore[arg-type]


def _smallest_inner_corner(grid: list[list[int | None]]) -> tuple[int, int] | None:
    for i, row in enumerate(grid):
        holes = sum(1 for cell in row if cell is None)
        if holes == 0:
            continue
        j = holes - 1
        below_is_hole = i + 1 < len(grid) and j < len(grid[i + 1]) and grid[i + 1][j] is None
        if not below_is_hole:
            return i, j
    return None


def _slide(grid: list[list[int | None]], i: int, j: int) -> None:
    while True:
        right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
        below = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
        if right is None and below is None:
            grid[i].pop(j)
            return
        if below is None or (right is not None and right < below):
            grid[i][j], grid[i][j + 1] = right, None
            j += 1
        else:
            grid[i][j], grid[i + 1][j] = below, None
            i += 1


def star_product(left: StandardTableau, right: StandardTableau) -> StandardTableau:
    """Return left * right, the rectification of ``right`` placed at the top right of ``left``.

    Raises:
        SteinbergValidationError: if the entry sets overlap.

    """
    if left.entries & right.entries:
        msg = f"Star product needs disjoint entries, {left} and {right} share {sorted(left.entries & right.entries)}"
        raise SteinbergValidationError(msg)
    if not right.rows:
        return left
    if not left.rows:
        return right
    width = len(left.rows[0])
    skew = SkewTableau(
        inner=Partition((width,) * len(right.rows)),
        rows=right.rows + left.rows,
    )
    return skew.rectify()


def star(*tableaux: StandardTableau) -> StandardTableau:
    """Fold :func:`star_product` left to right."""
    return reduce(star_product, tableaux, StandardTableau())


@dataclass(frozen=True)
class BijectionWord:
    """Bijection between finite sets of integers, stored as pairs sorted by source."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        """Sort the pairs and check the map is a bijection."""
        pairs = tuple(sorted((int(s), int(t)) for s, t in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        sources = [s for s, _ in pairs]
        targets = [t for _, t in pairs]
        if len(set(sources)) != len(sources):
            msg = f"Duplicate source in bijection {pairs}"
            raise SteinbergValidationError(msg)
        if len(set(targets)) != len(targets):
            msg = f"Duplicate target in bijection {pairs}"
            raise SteinbergValidationError(msg)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> BijectionWord:
        """Build from a source to target mapping."""
        return cls(tuple(mapping.items()))

    @classmethod
    def from_one_line(cls, word: Sequence[int]) -> BijectionWord:
        """Build the map ``i -> word[i-1]`` on 1..len(word)."""
        return cls(tuple(enumerate(word, start=1)))

    @property
    def sources(self) -> tuple[int, ...]:
        """Sources in increasing order."""
        return tuple(s for s, _ in self.pairs)

    @property
    def word(self) -> tuple[int, ...]:
        """Targets listed in increasing order of source."""
        return tuple(t for _, t in self.pairs)

    def as_dict(self) -> dict[int, int]:
        """Return the map as a dict."""
        return dict(self.pairs)

    def inverse(self) -> BijectionWord:
        """Return the inverse bijection."""
        return BijectionWord(tuple((t, s) for s, t in self.pairs))

    def __len__(self) -> int:
        """Cardinality of the domain."""
        return len(self.pairs)

    def to_json(self) -> dict[str, int]:
        """Return the JSON form, an object from source to target."""
        return {str(s): t for s, t in self.pairs}

    def __str__(self) -> str:
        """Return ``{1->4, 3->2}``."""
        return "{" + ", ".join(f"{s}->{t}" for s, t in self.pairs) + "}"


def rs_correspondence(word: BijectionWord) -> tuple[StandardTableau, StandardTableau]:
    """Robinson-Schensted by row insertion.

    Args:
        word: The bijection, read as its targets in increasing order of source.

    Returns:
        The insertion tableau on the targets and the recording tableau on the sources.

    """
    insertion: list[list[int]] = []
    recording: list[list[int]] = []
    for source, target in word.pairs:
        bumped = target
        row_index = 0
        while True:
            if row_index == len(insertion):
                insertion.append([bumped])
                recording.append([source])
                break
            row = insertion[row_index]
            position = bisect_right(row, bumped)
            if position == len(row):
                row.append(bumped)
                recording[row_index].append(source)
                break
            row[position], bumped = bumped, row[position]
            row_index += 1
    return (
        StandardTableau(tuple(tuple(row) for row in insertion)),
        StandardTableau(tuple(tuple(row) for row in recording)),
    )


def standard_tableaux(shape: Partition, bound: int = MAX_TABLEAU_SIZE) -> list[StandardTableau]:
    """Return every standard tableau of ``shape`` filled with 1..n.

    Raises:
        SteinbergRefusalError: if the shape has more than ``bound`` boxes.

    """
    if shape.size > bound:
        msg = f"Refusing to list tableaux of size {shape.size} > {bound}"
        raise SteinbergRefusalError(msg)
    tableaux = [StandardTableau(tuple(tuple(row) for row in rows)) for rows in _fillings(shape.parts)]
    logger.debug("Listed {} standard tableaux of shape {}", len(tableaux), shape)
    return tableaux


def _fillings(parts: tuple[int, ...]) -> Iterator[list[list[int]]]:
    # The largest entry sits in a removable corner; recurse on the rest.
    n = sum(parts)
    if n == 0:
        yield []
        return
    for i, part in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if part <= below:
            continue
        smaller = tuple(x for x in (*parts[:i], part - 1, *parts[i + 1 :]) if x > 0)
        for filling in _fillings(smaller):
            rows = [list(row) for row in filling]
            if i == len(rows):
                rows.append([])
            rows[i].append(n)
            yield rows


@dataclass(frozen=True)
class SignedYoungDiagram:
    """Multiset of rows, each a length and the sign of its first box.

    Signs alternate along a row. The box in column c is in the kernel of x^c,
    so column counts read off dim(V+ ∩ ker x^c) and dim(V- ∩ ker x^c).
    """

    rows: tuple[tuple[int, str], ...] = ()

    def __post_init__(self) -> None:
        """Validate rows and sort them longest first, ``+`` before ``-``."""
        for length, sign in self.rows:
            if length < 1 or sign not in (PLUS, MINUS):
                msg = f"Invalid signed row ({length}, {sign!r})"
                raise SteinbergValidationError(msg)
        ordered = tuple(sorted(self.rows, key=lambda row: (-row[0], row[1] != PLUS)))
        object.__setattr__(self, "rows", ordered)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> SignedYoungDiagram:
        """Parse rows written as alternating sign strings such as ``"-+"``."""
        parsed = []
        for text in rows:
            if not text or any(text[i] == text[i + 1] for i in range(len(text) - 1)):
                msg = f"Signed row {text!r} must be a nonempty alternating string"
                raise SteinbergValidationError(msg)
            if set(text) - {PLUS, MINUS}:
                msg = f"Signed row {text!r} may only contain '+' and '-'"
                raise SteinbergValidationError(msg)
            parsed.append((len(text), text[0]))
        return cls(tuple(parsed))

    @property
    def signature(self) -> tuple[int, int]:
        """Numbers of plus and minus boxes."""
        plus = sum((length + 1) // 2 if sign == PLUS else length // 2 for length, sign in self.rows)
        total = sum(length for length, _ in self.rows)
        return plus, total - plus

    @property
    def shape(self) -> Partition:
        """Underlying Young diagram."""
        return Partition(tuple(length for length, _ in self.rows))

    def row_strings(self) -> list[str]:
        """Rows as alternating sign strings in display order."""
        flip = {PLUS: MINUS, MINUS: PLUS}
        strings = []
        for length, sign in self.rows:
            chars = [sign]
            for _ in range(length - 1):
                chars.append(flip[chars[-1]])
            strings.append("".join(chars))
        return strings

    def star(self) -> SignedYoungDiagram:
        """Swap every sign."""
        return SignedYoungDiagram(
            tuple((length, MINUS if sign == PLUS else PLUS) for length, sign in self.rows)
        )

    def column_counts(self, columns: int) -> tuple[list[int], list[int]]:
        """Cumulative plus and minus box counts over the first c columns, c = 1..columns."""
        plus_cum: list[int] = []
        minus_cum: list[int] = []
        plus = minus = 0
        for c in range(1, columns + 1):
            for length, sign in self.rows:
                if length < c:
                    continue
                box_is_plus = (sign == PLUS) == (c % 2 == 1)
                if box_is_plus:
                    plus += 1
                else:
                    minus += 1
            plus_cum.append(plus)
            minus_cum.append(minus)
        return plus_cum, minus_cum

    def to_json(self) -> list[str]:
        """Return the JSON form, one sign string per row."""
        return self.row_strings()

    def __str__(self) -> str:
        """Return rows joined by commas, e.g. ``-+,-+,+``."""
        return ",".join(self.row_strings())


def signed_diagram_from_counts(
    plus_cum: Sequence[int],
    minus_cum: Sequence[int],
    signature: tuple[int, int] | None = None,
) -> SignedYoungDiagram:
    """Rebuild a signed diagram from its cumulative column sign counts.

    Args:
        plus_cum: n+(c) for c = 1..C.
        minus_cum: n-(c) for c = 1..C.
        signature: Expected (p, q); when given, the last counts must equal it.

    Raises:
        SteinbergInconsistencyError: if no signed diagram has these counts.

    """
    if len(plus_cum) != len(minus_cum):
        msg = f"Column count lists differ in length: {list(plus_cum)} vs {list(minus_cum)}"
        raise SteinbergInconsistencyError(msg)
    if signature is not None:
        last = (plus_cum[-1], minus_cum[-1]) if plus_cum else (0, 0)
        if last != tuple(signature):
            msg = f"Column counts end at {last}, expected signature {tuple(signature)}"
            raise SteinbergInconsistencyError(msg)

    columns = len(plus_cum)
    plus_col = [plus_cum[c] - (plus_cum[c - 1] if c else 0) for c in range(columns)]
    minus_col = [minus_cum[c] - (minus_cum[c - 1] if c else 0) for c in range(columns)]
    heights = [a + b for a, b in zip(plus_col, minus_col, strict=True)]
    if any(x < 0 for x in plus_col + minus_col):
        msg = f"Cumulative counts decrease: {list(plus_cum)}, {list(minus_cum)}"
        raise SteinbergInconsistencyError(msg)
    if any(heights[c] < heights[c + 1] for c in range(columns - 1)):
        msg = f"Column heights {heights} are not weakly decreasing"
        raise SteinbergInconsistencyError(msg)

    # starts_plus[c] / starts_minus[c]: rows of length > c by leading sign (c 0-based)
    starts_plus = [plus_col[c] if c % 2 == 0 else minus_col[c] for c in range(columns)] + [0]
    starts_minus = [minus_col[c] if c % 2 == 0 else plus_col[c] for c in range(columns)] + [0]
    rows: list[tuple[int, str]] = []
    for c in range(columns):
        ending_plus = starts_plus[c] - starts_plus[c + 1]
        ending_minus = starts_minus[c] - starts_minus[c + 1]
        if ending_plus < 0 or ending_minus < 0:
            msg = f"Column counts {list(plus_cum)}, {list(minus_cum)} give a negative row count at column {c + 1}"
            raise SteinbergInconsistencyError(msg)
        rows.extend([(c + 1, PLUS)] * ending_plus)
        rows.extend([(c + 1, MINUS)] * ending_minus)
    return SignedYoungDiagram(tuple(rows))
