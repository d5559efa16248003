"""Corner-faithful correspondences between the tableau families.

Two maps carry all corner bookkeeping used elsewhere:

* dropping the final West step of a tree-like shape of size ``n`` yields
  a permutation shape of size ``n`` (the deleted edge is exactly the
  leftmost column), losing one corner precisely when the shortened path
  ends with a South step;
* a symmetric tree-like tableau of size ``2n + 1`` splits along its main
  diagonal into a type-B tableau of size ``n`` and its mirror image.

The second map (``symmetric_to_type_b``, inverse ``type_b_to_symmetric``)
works marker-wise.  Going down, the topmost point of each column turns
into a 1 and every other point (necessarily leftmost in its row) into a
0; all remaining cells of the surviving lower-triangle diagram have
forced values, computed by one top-to-bottom sweep.  Going up, 1s that
are topmost in their column and 0s that are rightmost restricted zeros
turn back into points, a new first column marks the unrestricted rows,
and the result is mirrored.  Both directions finish with a full
re-validation; any inconsistency raises :class:`BijectionError` instead
of returning a wrong tableau.

The size-1 symmetric tableau has no representable type-B partner (it
would be the empty tableau of size 0, and border paths here are
non-empty), so both directions start at size 3 / size 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .chain import (
    corner_event_probability_dp,
    count_tableaux,
    first_step_west_probability,
    last_step_south_probability,
    total_corners,
)
from .errors import BijectionError, DomainError, InvalidTableauError
from .families import Family
from .shapes import SOUTH, WEST, BorderPath, Cell
from .tableaux import (
    SymmetricTreeLikeTableau,
    TypeBTableau,
    markers,
    unrestricted_rows,
    validate,
)

__all__ = [
    "ShapeCorrespondence",
    "tree_like_to_permutation_shape",
    "symmetric_to_type_b",
    "type_b_to_symmetric",
    "CornerDecomposition",
    "symmetric_corner_decomposition",
]


def tree_like_to_permutation_shape(path: BorderPath) -> BorderPath:
    """Drop the final West step (equivalently, the leftmost column).

    Corner counts satisfy ``corners(path) = corners(result) + 1`` when the
    result ends with a South step and are equal otherwise.
    """
    path.require_tree_like()
    return BorderPath(path.steps[:-1])


@dataclass(frozen=True)
class ShapeCorrespondence:
    """A tree-like shape paired with its permutation shape."""

    tree_like_path: BorderPath
    permutation_path: BorderPath

    @classmethod
    def of_tree_like(cls, path: BorderPath) -> "ShapeCorrespondence":
        return cls(path, tree_like_to_permutation_shape(path))

    @property
    def corner_difference(self) -> int:
        return self.tree_like_path.corner_count() - self.permutation_path.corner_count()


def _require_valid(t, what: str) -> None:
    result = validate(t)
    if not result.ok:
        raise InvalidTableauError(f"{what}: {result.violations[0].message}")


def symmetric_to_type_b(t: SymmetricTreeLikeTableau) -> TypeBTableau:
    """Fold a symmetric tree-like tableau of size ``2n + 1`` down to a
    type-B tableau of size ``n``.

    Point markers land on the lower triangle (column and row indices both
    shifted down by one after deleting row 1 and column 1); the remaining
    cells take their unique consistent values.
    """
    if not isinstance(t, SymmetricTreeLikeTableau):
        raise InvalidTableauError(f"expected a symmetric tree-like tableau, got {t!r}")
    _require_valid(t, "symmetric input")
    if t.size < 3:
        raise DomainError("size-1 tableaux fold to the empty tableau, which has no border path")
    n = (t.size - 1) // 2
    steps = t.path.steps
    b_path = BorderPath(steps[n + 1 : 2 * n + 1])
    shifted = b_path.shifted_shape()
    lengths = t.row_lengths
    profile = shifted.row_lengths
    if len(profile) != n or any(
        min(lengths[r - 1], r) - 1 != profile[r - 2] for r in range(2, n + 2)
    ):
        raise BijectionError("lower triangle does not match the folded shape", witness=t)

    ones: set[Cell] = set()
    zeros: set[Cell] = set()
    for r, c in t.points:
        if c < 2 or c > r:
            continue
        covered_above = any((i, c) in t.points for i in range(c, r)) or any(
            (c, j) in t.points for j in range(1, c)
        )
        if covered_above:
            zeros.add((r - 1, c - 1))  # leftmost point of its row
        else:
            ones.add((r - 1, c - 1))  # topmost point of its column
    unrestricted = frozenset(r - 1 for r, c in t.points if c == 1 and r >= 2)

    rows: list[tuple[int, ...]] = []
    col_has_one = [False] * (shifted.staircase_count + 1)
    for big_r, length in enumerate(profile, start=1):
        zero_mark = next((c for rr, c in zeros if rr == big_r), None)
        all_zero_row = big_r not in unrestricted and zero_mark is None
        if all_zero_row and not shifted.is_staircase_row(big_r):
            raise BijectionError(
                f"row {big_r} is restricted without a marked 0 and has no diagonal cell",
                witness=t,
            )
        row: list[int] = []
        for c in range(1, length + 1):
            if all_zero_row:
                bit = 0
            elif (big_r, c) in ones:
                bit = 1
            elif shifted.is_diagonal((big_r, c)):
                bit = 1
            elif zero_mark is not None and c <= zero_mark:
                bit = 0
            elif col_has_one[c]:
                bit = 1
            else:
                bit = 0
            row.append(bit)
            if bit:
                col_has_one[c] = True
        rows.append(tuple(row))

    b = TypeBTableau(b_path, tuple(rows))
    _check_fold(t, b, ones, zeros, unrestricted)
    return b


def _check_fold(
    t: SymmetricTreeLikeTableau,
    b: TypeBTableau,
    ones: set[Cell],
    zeros: set[Cell],
    unrestricted: frozenset[int],
) -> None:
    """The folded tableau must be valid and re-derive the same markers."""
    result = validate(b)
    if not result.ok:
        raise BijectionError(
            f"folded filling breaks type-B rules: {result.violations[0].message}", witness=t
        )
    m = markers(b)
    derived_ones = {cell for cell in m.topmost_ones if not b.shifted.is_diagonal(cell)}
    diag_zero_rows = {r for r, _ in m.diagonal_zeros}
    derived_zeros = {
        cell for cell in m.rightmost_restricted_zeros if cell[0] not in diag_zero_rows
    }
    if (
        derived_ones != ones
        or derived_zeros != zeros
        or frozenset(unrestricted_rows(b)) != unrestricted
    ):
        raise BijectionError("folded markers disagree with the point classification", witness=t)


def type_b_to_symmetric(b: TypeBTableau) -> SymmetricTreeLikeTableau:
    """Unfold a type-B tableau of size ``n`` into a symmetric tree-like
    tableau of size ``2n + 1``; inverse of :func:`symmetric_to_type_b`."""
    if not isinstance(b, TypeBTableau):
        raise InvalidTableauError(f"expected a type-B tableau, got {b!r}")
    _require_valid(b, "type-B input")
    n = b.size
    q = b.path.steps
    mirrored = "".join(WEST if ch == SOUTH else SOUTH for ch in reversed(q))
    sym_path = BorderPath(SOUTH + mirrored + q + WEST)

    m = markers(b)
    diag_zero_rows = {r for r, _ in m.diagonal_zeros}
    lower: set[Cell] = {(1, 1)}
    lower.update((r + 1, 1) for r in unrestricted_rows(b))
    lower.update(
        (r + 1, c + 1) for r, c in m.rightmost_restricted_zeros if r not in diag_zero_rows
    )
    lower.update((r + 1, c + 1) for r, c in m.topmost_ones if not b.shifted.is_diagonal((r, c)))
    points = frozenset(lower) | frozenset((c, r) for r, c in lower)

    t = SymmetricTreeLikeTableau(sym_path, points)
    result = validate(t)
    if not result.ok:
        raise BijectionError(
            f"unfolded tableau breaks tree-like rules: {result.violations[0].message}",
            witness=b,
        )
    return t


@dataclass(frozen=True)
class CornerDecomposition:
    """Corner total of symmetric tableaux split along the fold.

    Corners of the symmetric border path at positions ``2..n`` and
    ``n+2..2n`` come in mirror pairs from type-B corners (``twice_type_b``),
    positions ``1`` and ``2n+1`` fire when the type-B path ends South
    (``south_term``), and position ``n+1`` when it starts West
    (``west_term``).
    """

    index: int
    twice_type_b: int
    south_term: int
    west_term: int

    @property
    def total(self) -> int:
        return self.twice_type_b + self.south_term + self.west_term


def _exact_count(probability, cardinality: int) -> int:
    scaled = probability * cardinality
    if scaled.denominator != 1:
        raise BijectionError(f"non-integer event count {scaled}")  # pragma: no cover
    return scaled.numerator


def symmetric_corner_decomposition(n: int) -> CornerDecomposition:
    """Split ``c(T^sym_{2n+1})`` into its type-B contributions, exactly.

    Asserts the component identities (``south_term = 2^n (n-1)!`` and
    ``west_term = 2^{n-1} n!``) and that the three parts sum to the
    symmetric corner total.
    """
    if n < 1:
        raise DomainError(f"index must be at least 1, got {n}")
    b_count = count_tableaux(n, Family.TYPE_B)
    twice_b = 2 * total_corners(n, Family.TYPE_B) if n >= 2 else 0
    south = 2 * _exact_count(last_step_south_probability(n, Family.TYPE_B), b_count)
    west = _exact_count(first_step_west_probability(n, Family.TYPE_B), b_count)
    deco = CornerDecomposition(n, twice_b, south, west)

    sym_total = sum(
        _exact_count(corner_event_probability_dp(n, k, Family.SYMMETRIC), b_count)
        for k in range(1, 2 * n + 2)
    )
    if (
        deco.south_term != (1 << n) * factorial(n - 1)
        or deco.west_term != (1 << (n - 1)) * factorial(n)
        or deco.total != sym_total
    ):
        raise BijectionError(f"corner decomposition mismatch at n={n}: {deco}")
    return deco
