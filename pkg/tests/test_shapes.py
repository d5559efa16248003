"""Border paths, Ferrers shapes, shifted shapes."""

import pytest
from hypothesis import given, strategies as st

from corners.errors import (
    EmptyPathError,
    IllegalCharacterError,
    IndexOutOfRangeError,
    NotATreeLikeShapeError,
)
from corners.shapes import BorderPath, FerrersShape, ShiftedShape, all_paths

paths = st.text(alphabet="SW", min_size=1, max_size=40).map(BorderPath)


def test_rejects_empty_and_illegal():
    with pytest.raises(EmptyPathError):
        BorderPath("")
    with pytest.raises(IllegalCharacterError):
        BorderPath("SXW")


def test_step_indexing_is_one_based():
    p = BorderPath("SW")
    assert p.step(1) == "S" and p.step(2) == "W"
    with pytest.raises(IndexOutOfRangeError):
        p.step(0)
    with pytest.raises(IndexOutOfRangeError):
        p.step(3)


def test_row_lengths_of_figure_paths():
    assert BorderPath("SWWSSWWWSSWS").row_lengths == (6, 4, 4, 1, 1, 0)
    assert BorderPath("SSWWSSWWWSSWSW").row_lengths == (7, 7, 5, 5, 2, 2, 1)
    assert BorderPath("WSSWWS").row_lengths == (2, 2, 0)
    assert BorderPath("WSSWWS").column_heights == (2, 2, 0)


def test_zero_rows_and_zero_columns():
    # trailing south steps are rows of length 0; leading west steps are
    # columns of height 0
    p = BorderPath("WWSS")
    assert p.row_lengths == (0, 0)
    assert p.column_heights == (0, 0)
    assert p.corner_positions() == ()


@given(paths)
def test_row_column_duality(p):
    assert len(p.row_lengths) == p.steps.count("S")
    assert len(p.column_heights) == p.steps.count("W")
    assert sum(p.row_lengths) == sum(p.column_heights)
    assert p.row_count + p.column_count == p.half_perimeter == len(p)


@given(paths)
def test_conjugate_is_an_involution(p):
    q = p.conjugate()
    assert q.conjugate() == p
    assert q.row_lengths == p.column_heights
    assert p.is_self_conjugate() == (p.steps == q.steps)


@given(paths)
def test_corner_positions_mirror_under_conjugation(p):
    h = len(p)
    mirrored = sorted(h - k for k in p.conjugate().corner_positions())
    assert mirrored == list(p.corner_positions())


@given(paths)
def test_corners_are_south_west_step_pairs(p):
    expected = [k for k in range(1, len(p)) if p.step(k) == "S" and p.step(k + 1) == "W"]
    assert list(p.corner_positions()) == expected
    assert p.corner_count() == len(expected)


@given(paths)
def test_corner_cells_sit_at_row_ends(p):
    lengths = p.row_lengths
    for k in p.corner_positions():
        r, c = p.corner_cell(k)
        assert lengths[r - 1] == c > 0
    with pytest.raises(IndexOutOfRangeError):
        p.corner_cell(len(p) + 1)


def test_admissibility_flags():
    assert BorderPath("SW").is_permutation_shape()
    assert not BorderPath("WS").is_permutation_shape()
    assert BorderPath("SW").is_tree_like_shape()
    assert not BorderPath("SS").is_tree_like_shape()
    with pytest.raises(NotATreeLikeShapeError):
        BorderPath("WS").require_tree_like()


@pytest.mark.parametrize("h", range(1, 13))
def test_ferrers_roundtrip_exhaustive(h):
    for p in all_paths(h):
        assert p.shape().path() == p


def test_all_paths_is_lexicographic_and_complete():
    got = [p.steps for p in all_paths(3)]
    assert got == sorted(got)
    assert len(got) == 8
    assert len(set(got)) == 8


def test_ferrers_rejects_bad_rows():
    with pytest.raises(ValueError):
        FerrersShape.from_rows((1, 2))
    with pytest.raises(ValueError):
        FerrersShape.from_rows((-1,))


def test_shifted_shape_of_figure_type_b():
    s = BorderPath("WSSWWS").shifted_shape()
    assert s.staircase_count == 3
    assert s.row_lengths == (1, 2, 3, 2, 2, 0)
    assert s.diagonal_cells() == ((1, 1), (2, 2), (3, 3))
    assert s.is_diagonal((2, 2)) and not s.is_diagonal((3, 2))
    assert s.is_staircase_row(3) and not s.is_staircase_row(4)
    assert s.row_count == 6


@pytest.mark.parametrize("h", range(1, 11))
def test_shifted_roundtrip_exhaustive(h):
    for p in all_paths(h):
        s = ShiftedShape.from_path(p)
        assert s.path() == p
        assert s.row_count == len(p)
        assert len(s.diagonal_cells()) == s.staircase_count == p.column_count


@given(paths)
def test_shifted_cell_count_adds_staircase(p):
    s = ShiftedShape.from_path(p)
    k = p.column_count
    assert s.cell_count == sum(p.row_lengths) + k * (k + 1) // 2
