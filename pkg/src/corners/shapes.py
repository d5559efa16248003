"""Border paths, Ferrers shapes and shifted Ferrers shapes.

The southeast border of a Ferrers diagram with half-perimeter ``h`` is
encoded as a word of length ``h`` over the alphabet ``S`` (south step) and
``W`` (west step), read from the northeast end of the border.  Positions
are 1-based throughout the public API: ``path.step(1)`` is the
northeast-most border edge.

Geometry of the encoding:

* the i-th ``S`` of the word is the right edge of row ``i`` (rows are
  numbered top to bottom), whose length equals the number of ``W`` steps
  occurring later in the word;
* the j-th ``W`` of the word is the bottom edge of the j-th column counted
  from the *right*, whose height equals the number of ``S`` steps occurring
  earlier in the word.

Zero-length rows (trailing ``S`` steps) and zero-height columns (leading
``W`` steps) are legal and preserved by the shape round trip.

A *corner* sits at position ``k`` whenever step ``k`` is South and step
``k + 1`` is West; the corner cell is the last cell of the row whose right
edge is step ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import (
    EmptyPathError,
    IllegalCharacterError,
    IndexOutOfRangeError,
    NotATreeLikeShapeError,
)

__all__ = [
    "SOUTH",
    "WEST",
    "Cell",
    "BorderPath",
    "FerrersShape",
    "ShiftedShape",
    "all_paths",
]

SOUTH = "S"
WEST = "W"

#: A cell is a 1-based (row, column) pair; row 1 is the top row.
Cell = tuple[int, int]

_FLIP = {SOUTH: WEST, WEST: SOUTH}


@dataclass(frozen=True)
class BorderPath:
    """An S/W word describing the southeast border of a diagram."""

    steps: str

    def __post_init__(self) -> None:
        if not self.steps:
            raise EmptyPathError("a border path needs at least one step")
        for position, ch in enumerate(self.steps):
            if ch not in (SOUTH, WEST):
                raise IllegalCharacterError(self.steps, position)

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def half_perimeter(self) -> int:
        return len(self.steps)

    def step(self, k: int) -> str:
        """Return the step at 1-based position ``k``."""
        if not 1 <= k <= len(self.steps):
            raise IndexOutOfRangeError(
                f"position {k} outside 1..{len(self.steps)}"
            )
        return self.steps[k - 1]

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        """Lengths of the rows, top to bottom (zero-length rows included)."""
        lengths: list[int] = []
        west_remaining = self.steps.count(WEST)
        for ch in self.steps:
            if ch == SOUTH:
                lengths.append(west_remaining)
            else:
                west_remaining -= 1
        return tuple(lengths)

    @cached_property
    def column_heights(self) -> tuple[int, ...]:
        """Heights of the columns, left to right (zero-height columns included)."""
        heights: list[int] = []
        south_seen = 0
        for ch in self.steps:
            if ch == SOUTH:
                south_seen += 1
            else:
                heights.append(south_seen)
        heights.reverse()  # the first W of the word is the rightmost column
        return tuple(heights)

    @property
    def row_count(self) -> int:
        return self.steps.count(SOUTH)

    @property
    def column_count(self) -> int:
        return self.steps.count(WEST)

    def corner_positions(self) -> tuple[int, ...]:
        """1-based positions ``k`` with step k South and step k+1 West."""
        s = self.steps
        return tuple(
            k for k in range(1, len(s)) if s[k - 1] == SOUTH and s[k] == WEST
        )

    def corner_count(self) -> int:
        return self.steps.count(SOUTH + WEST)

    def corner_cell(self, k: int) -> Cell:
        """The cell whose right edge is step ``k`` and bottom edge step ``k+1``."""
        if k not in self.corner_positions():
            raise IndexOutOfRangeError(f"no corner at position {k}")
        row = self.steps[:k].count(SOUTH)
        return (row, self.row_lengths[row - 1])

    def corner_cells(self) -> tuple[Cell, ...]:
        return tuple(self.corner_cell(k) for k in self.corner_positions())

    def conjugate(self) -> "BorderPath":
        """Reflect the diagram through its main diagonal."""
        return BorderPath("".join(_FLIP[ch] for ch in reversed(self.steps)))

    def is_self_conjugate(self) -> bool:
        return self.conjugate().steps == self.steps

    @property
    def first_step_west(self) -> bool:
        return self.steps[0] == WEST

    @property
    def last_step_south(self) -> bool:
        return self.steps[-1] == SOUTH

    def is_tree_like_shape(self) -> bool:
        """True when every row and every column is non-empty."""
        return self.steps[0] == SOUTH and self.steps[-1] == WEST

    def require_tree_like(self) -> None:
        if not self.is_tree_like_shape():
            raise NotATreeLikeShapeError(
                f"path {self.steps!r} must start with S and end with W"
            )

    def is_permutation_shape(self) -> bool:
        """True when every column has at least one cell."""
        return self.steps[0] == SOUTH

    def shape(self) -> "FerrersShape":
        return FerrersShape(self.row_lengths, self.column_count)

    def shifted_shape(self) -> "ShiftedShape":
        return ShiftedShape.from_path(self)


@dataclass(frozen=True)
class FerrersShape:
    """Row lengths plus an explicit column count.

    ``column_count`` may exceed the first row length; the difference is the
    number of zero-height columns, which the border path records as leading
    West steps.
    """

    row_lengths: tuple[int, ...]
    column_count: int

    def __post_init__(self) -> None:
        lengths = tuple(self.row_lengths)
        object.__setattr__(self, "row_lengths", lengths)
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {lengths}")
        if lengths and lengths[-1] < 0:
            raise ValueError("row lengths must be non-negative")
        if self.column_count < (lengths[0] if lengths else 0):
            raise ValueError("column count below the first row length")

    @classmethod
    def from_rows(cls, row_lengths: tuple[int, ...] | list[int]) -> "FerrersShape":
        rows = tuple(row_lengths)
        return cls(rows, rows[0] if rows else 0)

    @property
    def row_count(self) -> int:
        return len(self.row_lengths)

    @property
    def half_perimeter(self) -> int:
        return self.row_count + self.column_count

    @property
    def cell_count(self) -> int:
        return sum(self.row_lengths)

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.row_lengths, start=1):
            for c in range(1, length + 1):
                yield (r, c)

    def path(self) -> BorderPath:
        """Rebuild the border path; inverse of ``BorderPath.shape``."""
        parts = [WEST * (self.column_count - (self.row_lengths[0] if self.row_lengths else 0))]
        for r, length in enumerate(self.row_lengths):
            below = self.row_lengths[r + 1] if r + 1 < len(self.row_lengths) else 0
            parts.append(SOUTH + WEST * (length - below))
        return BorderPath("".join(parts))


@dataclass(frozen=True)
class ShiftedShape:
    """A staircase glued on top of a base Ferrers diagram.

    A base diagram with ``k`` columns gains ``k`` extra rows above it; the
    extra row ``i`` (counted top to bottom, ``i = 1..k``) occupies columns
    ``1..i``, so the rightmost cells of the added rows are the *diagonal*
    cells ``(i, i)``.  The border path of the shifted shape is the border
    path of its base, and both share the same half-perimeter.
    """

    base: FerrersShape

    @classmethod
    def from_path(cls, path: BorderPath) -> "ShiftedShape":
        return cls(path.shape())

    @property
    def staircase_count(self) -> int:
        """Number of added staircase rows; equals the column count."""
        return self.base.column_count

    @property
    def half_perimeter(self) -> int:
        return self.base.half_perimeter

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        """Row lengths of the shifted diagram, staircase rows first."""
        k = self.staircase_count
        return tuple(range(1, k + 1)) + self.base.row_lengths

    @property
    def row_count(self) -> int:
        return len(self.row_lengths)

    @property
    def cell_count(self) -> int:
        return sum(self.row_lengths)

    def diagonal_cells(self) -> tuple[Cell, ...]:
        return tuple((i, i) for i in range(1, self.staircase_count + 1))

    def is_diagonal(self, cell: Cell) -> bool:
        r, c = cell
        return r == c and r <= self.staircase_count

    def is_staircase_row(self, row: int) -> bool:
        return 1 <= row <= self.staircase_count

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.row_lengths, start=1):
            for c in range(1, length + 1):
                yield (r, c)

    def path(self) -> BorderPath:
        return self.base.path()


def all_paths(half_perimeter: int) -> Iterator[BorderPath]:
    """All ``2**h`` border paths of the given half-perimeter, lexicographic
    with ``S`` before ``W``."""
    if half_perimeter < 1:
        raise EmptyPathError("half-perimeter must be at least 1")
    for mask in range(1 << half_perimeter):
        word = "".join(
            WEST if mask >> (half_perimeter - 1 - i) & 1 else SOUTH
            for i in range(half_perimeter)
        )
        yield BorderPath(word)
