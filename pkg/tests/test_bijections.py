"""Folding between symmetric and type-B tableaux; shape projection."""

from math import factorial

import pytest

from conftest import cached_census, cached_tableaux
from corners.bijections import (
    CornerDecomposition,
    ShapeCorrespondence,
    symmetric_corner_decomposition,
    symmetric_to_type_b,
    tree_like_to_permutation_shape,
    type_b_to_symmetric,
)
from corners.errors import DomainError, NotATreeLikeShapeError
from corners.families import Family
from corners.shapes import BorderPath
from corners.tableaux import (
    SymmetricTreeLikeTableau,
    TypeBTableau,
    canonical_key,
    corner_stats,
)

# a worked pair: the size-11 staircase symmetric tableau folds onto a
# two-column element of B_5
SYMMETRIC_11 = SymmetricTreeLikeTableau(
    BorderPath("SWSWSWSWSWSW"),
    frozenset(
        [(1, 1), (1, 2), (1, 5), (1, 6), (2, 1), (2, 4), (3, 4),
         (4, 2), (4, 3), (5, 1), (6, 1)]
    ),
)
TYPE_B_5 = TypeBTableau.from_strings("SWSWS", ["1", "00", "01", "1", ""])


def test_worked_pair_folds_both_ways():
    assert symmetric_to_type_b(SYMMETRIC_11) == TYPE_B_5
    assert type_b_to_symmetric(TYPE_B_5) == SYMMETRIC_11


def test_size_three_cases():
    l_shape = SymmetricTreeLikeTableau(
        BorderPath("SWSW"), frozenset([(1, 1), (1, 2), (2, 1)])
    )
    square = SymmetricTreeLikeTableau(
        BorderPath("SSWW"), frozenset([(1, 1), (1, 2), (2, 1)])
    )
    empty_row = TypeBTableau.from_strings("S", [""])
    one_column = TypeBTableau.from_strings("W", ["1"])
    assert symmetric_to_type_b(l_shape) == empty_row
    assert symmetric_to_type_b(square) == one_column
    assert type_b_to_symmetric(empty_row) == l_shape
    assert type_b_to_symmetric(one_column) == square


def test_fold_rejects_size_one():
    t = SymmetricTreeLikeTableau(BorderPath("SW"), frozenset([(1, 1)]))
    with pytest.raises(DomainError):
        symmetric_to_type_b(t)


@pytest.mark.parametrize("n", range(1, 5))
def test_unfold_then_fold_is_identity_on_type_b(n):
    for b in cached_tableaux(n, Family.TYPE_B):
        t = type_b_to_symmetric(b)
        assert t.size == 2 * n + 1
        assert symmetric_to_type_b(t) == b


@pytest.mark.parametrize("size", (3, 5, 7, 9))
def test_fold_then_unfold_is_identity_and_bijective(size):
    images = set()
    for t in cached_tableaux(size, Family.SYMMETRIC):
        b = symmetric_to_type_b(t)
        images.add(canonical_key(b))
        assert type_b_to_symmetric(b) == t
    n = (size - 1) // 2
    assert len(images) == 2**n * factorial(n)


def test_fold_preserves_corner_bookkeeping():
    # corners of the symmetric tableau = corners of its two mirrored base
    # copies plus the head and the middle, which is what the
    # decomposition identity tracks globally
    for size in (5, 7, 9):
        n = (size - 1) // 2
        total = cached_census(size, Family.SYMMETRIC).total_corners
        d = symmetric_corner_decomposition(n)
        assert d.total == total


def test_shape_projection_examples():
    assert tree_like_to_permutation_shape(BorderPath("SSW")).steps == "SS"
    assert tree_like_to_permutation_shape(BorderPath("SWW")).steps == "SW"
    with pytest.raises(NotATreeLikeShapeError):
        tree_like_to_permutation_shape(BorderPath("WSW"))
    with pytest.raises(NotATreeLikeShapeError):
        tree_like_to_permutation_shape(BorderPath("SWS"))


def test_shape_projection_corner_difference():
    for n in range(1, 7):
        for t in cached_tableaux(n, Family.TREE_LIKE):
            corr = ShapeCorrespondence.of_tree_like(t.path)
            assert corr.permutation_path.half_perimeter == n
            diff = corr.tree_like_path.corner_count() - corr.permutation_path.corner_count()
            assert corr.corner_difference == diff
            assert diff == int(corr.permutation_path.last_step_south)


def test_shape_projection_aggregate_at_3():
    # summing corners over both families with multiplicity: 7 = 5 + 2
    tree = cached_census(3, Family.TREE_LIKE).total_corners
    perm = cached_census(3, Family.PERMUTATION).total_corners
    assert tree == 7 and perm == 5
    assert tree == perm + factorial(2)


def test_decomposition_values():
    assert symmetric_corner_decomposition(1) == CornerDecomposition(1, 0, 2, 1)
    assert symmetric_corner_decomposition(1).total == 3
    d = symmetric_corner_decomposition(2)
    assert (d.twice_type_b, d.south_term, d.west_term) == (6, 4, 4)
    assert d.total == 14


def test_decomposition_component_counts_at_2():
    c = cached_census(2, Family.TYPE_B)
    assert c.last_step_south_count == 2
    assert c.first_step_west_count == 4
    d = symmetric_corner_decomposition(2)
    assert d.south_term == 2 * c.last_step_south_count
    assert d.west_term == c.first_step_west_count


@pytest.mark.parametrize("n", range(1, 9))
def test_decomposition_closed_form(n):
    d = symmetric_corner_decomposition(n)
    assert d.south_term == 2**n * factorial(n - 1)
    assert d.west_term == 2 ** (n - 1) * factorial(n)
    assert d.total == d.twice_type_b + d.south_term + d.west_term


def test_fold_requires_valid_input():
    from corners.errors import InvalidTableauError

    broken = TypeBTableau.from_strings("SWSWS", ["1", "10", "01", "1", ""])
    with pytest.raises(InvalidTableauError):
        type_b_to_symmetric(broken)
