"""Tableau construction, validation, markers, serialization."""

import pytest
from hypothesis import given, strategies as st

from conftest import cached_tableaux
from corners.errors import ShapeFillingMismatchError
from corners.families import Family
from corners.shapes import BorderPath, all_paths
from corners.tableaux import (
    PermutationTableau,
    SymmetricTreeLikeTableau,
    TreeLikeTableau,
    TypeBTableau,
    canonical_key,
    corner_stats,
    family_of,
    from_record,
    is_symmetric,
    markers,
    to_record,
    transpose,
    unrestricted_row_count,
    unrestricted_rows,
    validate,
)

# worked examples: one pointed tableau of size 13, one 0/1 tableau of
# size 12, one type-B tableau of size 6
TREE_LIKE_13 = TreeLikeTableau(
    BorderPath("SSWWSSWWWSSWSW"),
    frozenset(
        [(1, 1), (1, 2), (1, 4), (1, 7), (2, 2), (2, 6), (3, 2),
         (4, 1), (4, 3), (4, 5), (5, 2), (6, 1), (7, 1)]
    ),
)
PERMUTATION_12 = PermutationTableau.from_strings(
    "SWWSSWWWSSWS", ["010011", "0011", "0111", "0", "1", ""]
)
TYPE_B_6 = TypeBTableau.from_strings("WSSWWS", ["1", "00", "011", "01", "00", ""])


def test_tree_like_example_is_valid():
    assert validate(TREE_LIKE_13).ok
    assert TREE_LIKE_13.size == 13
    stats = corner_stats(TREE_LIKE_13)
    assert TREE_LIKE_13.path.corner_positions() == (2, 6, 11, 13)
    assert stats.corner_count == 4
    assert stats.occupied_corner_count == 2


def test_permutation_example_is_valid():
    assert validate(PERMUTATION_12).ok
    assert PERMUTATION_12.path.corner_positions() == (1, 5, 10)
    assert unrestricted_rows(PERMUTATION_12) == (1, 3, 4, 5, 6)
    assert unrestricted_row_count(PERMUTATION_12) == 5
    m = markers(PERMUTATION_12)
    assert m.restricted_zeros == frozenset({(2, 2)})
    assert m.rightmost_restricted_zeros == frozenset({(2, 2)})
    assert m.diagonal_zeros == frozenset()
    assert (5, 1) in m.topmost_ones and (1, 2) in m.topmost_ones


def test_type_b_example_is_valid():
    assert validate(TYPE_B_6).ok
    assert TYPE_B_6.shifted.row_lengths == (1, 2, 3, 2, 2, 0)
    m = markers(TYPE_B_6)
    assert m.diagonal_zeros == frozenset({(2, 2)})
    assert unrestricted_rows(TYPE_B_6) == (1, 6)
    assert TYPE_B_6.path.corner_positions() == (3,)


def test_filling_must_match_shape():
    with pytest.raises(ShapeFillingMismatchError):
        PermutationTableau.from_strings("SW", ["10"])
    with pytest.raises(ShapeFillingMismatchError):
        TypeBTableau.from_strings("WSSWWS", ["1", "00", "011", "01", "00"])


def test_validation_catches_each_rule():
    # column 2 with no 1
    t = PermutationTableau.from_strings("SWW", ["00"])
    assert not validate(t).ok
    # restricted 0 with a 1 to its left
    t = PermutationTableau.from_strings("SSWW", ["11", "10"])
    assert {v.rule for v in validate(t).violations} == {"restricted-zero-blocked"}
    # diagonal 0 in a row that is not all zero
    t = TypeBTableau.from_strings("WWS", ["1", "10", ""])
    assert any(v.rule == "diagonal-zero-row" for v in validate(t).violations)
    # tree-like point with both directions occupied
    t = TreeLikeTableau(BorderPath("SSWW"), frozenset([(1, 1), (1, 2), (2, 1), (2, 2)]))
    assert any(v.rule == "point-direction" for v in validate(t).violations)
    # missing root
    t = TreeLikeTableau(BorderPath("SW"), frozenset())
    assert not validate(t).ok


def test_alternate_point_reading_changes_the_count():
    # requiring only one empty direction (instead of exactly one) admits
    # 7 pointed fillings at size 3 rather than 6
    total = 0
    loose = 0
    for t in cached_tableaux(3, Family.TREE_LIKE):
        total += 1
    for path in all_paths(4):
        if not path.is_tree_like_shape():
            continue
        cells = [
            (r, c)
            for r, length in enumerate(path.row_lengths, start=1)
            for c in range(1, length + 1)
        ]
        for mask in range(1 << len(cells)):
            points = frozenset(cells[i] for i in range(len(cells)) if mask >> i & 1)
            t = TreeLikeTableau(path, points)
            if validate(t, point_rule="at-least-one").ok:
                loose += 1
    assert total == 6
    assert loose == 7


def test_alternate_blocked_side_changes_the_count():
    # blocking restricted 0s on their right instead of left admits 7
    # fillings of B_2 rather than 8
    strict = sum(1 for _ in cached_tableaux(2, Family.TYPE_B))
    loose = 0
    for path in all_paths(2):
        lengths = path.shifted_shape().row_lengths
        cells = sum(lengths)
        for mask in range(1 << cells):
            bits = []
            i = 0
            for length in lengths:
                bits.append(tuple(mask >> (i + j) & 1 for j in range(length)))
                i += length
            t = TypeBTableau(path, tuple(bits))
            if validate(t, blocked_side="right").ok:
                loose += 1
    assert strict == 8
    assert loose == 7


def test_validate_rejects_unknown_rule_values():
    with pytest.raises(ValueError):
        validate(TREE_LIKE_13, point_rule="sometimes")
    with pytest.raises(ValueError):
        validate(TYPE_B_6, blocked_side="top")


def test_transpose_and_symmetry():
    assert not is_symmetric(TREE_LIKE_13)
    twice = transpose(transpose(TREE_LIKE_13))
    assert twice.path == TREE_LIKE_13.path and twice.points == TREE_LIKE_13.points
    square = SymmetricTreeLikeTableau(
        BorderPath("SSWW"), frozenset([(1, 1), (1, 2), (2, 1)])
    )
    assert validate(square).ok
    assert is_symmetric(square)


def test_symmetric_construction_guards():
    from corners.errors import NotSymmetricError

    with pytest.raises(NotSymmetricError):
        SymmetricTreeLikeTableau(BorderPath("SWW"), frozenset([(1, 1)]))
    with pytest.raises(NotSymmetricError):
        SymmetricTreeLikeTableau(BorderPath("SSWW"), frozenset([(1, 1), (1, 2)]))


def test_family_of():
    assert family_of(TREE_LIKE_13) is Family.TREE_LIKE
    assert family_of(PERMUTATION_12) is Family.PERMUTATION
    assert family_of(TYPE_B_6) is Family.TYPE_B


@pytest.mark.parametrize(
    "t", [TREE_LIKE_13, PERMUTATION_12, TYPE_B_6], ids=["tree", "perm", "type-b"]
)
def test_record_roundtrip(t):
    back = from_record(to_record(t))
    assert back == t
    assert family_of(back) is family_of(t)


@given(st.integers(2, 5), st.data())
def test_record_roundtrip_across_families(n, data):
    family = data.draw(st.sampled_from(list(Family)))
    size = n | 1 if family is Family.SYMMETRIC else n
    pool = cached_tableaux(size, family)
    t = data.draw(st.sampled_from(pool))
    assert from_record(to_record(t)) == t


def test_canonical_key_orders_path_then_filling():
    keys = [canonical_key(t) for t in cached_tableaux(3, Family.PERMUTATION)]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
