from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rankchains.formats import (
    format_number,
    matrix_from_text,
    matrix_to_csv,
    matrix_to_dict,
    matrix_to_json,
    matrix_to_text,
    parse_number,
    vector_from_text,
    vector_to_text,
)
from rankchains.matrices import ExactMatrix, build_W_bar, build_W_under


def test_text_layout():
    text = matrix_to_text(build_W_bar(1, 2, 3))
    assert text == "3 3\n#row\n#row 2\n#row 3\n#col 1,2\n#col 1,3\n#col 2,3\n1 1 1\n1 0 1\n0 1 1\n"
    assert matrix_to_text(build_W_bar(1, 2, 3), labels=False) == "3 3\n1 1 1\n1 0 1\n0 1 1\n"


def test_text_round_trip_keeps_labels():
    W = build_W_under(1, 2, 5)
    back = matrix_from_text(matrix_to_text(W))
    assert back == W
    assert back.row_labels == W.row_labels and back.col_labels == W.col_labels


@given(st.lists(st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=3, max_size=3), min_size=1, max_size=4))
def test_text_round_trip_unlabelled(rows):
    M = ExactMatrix.from_rows(rows)
    assert matrix_from_text(matrix_to_text(M)) == M


def test_text_rejects_bad_input():
    for bad in ("", "2 2\n1 0\n", "1 2\n1 x\n", "x y\n", "1 2\n1 2 3\n"):
        with pytest.raises(ValueError):
            matrix_from_text(bad)


def test_comment_lines_are_ignored():
    assert matrix_from_text("# note\n1 2\n#anything\n3 4\n").rows() == [[3, 4]]


def test_csv_and_json():
    W = build_W_bar(1, 1, 2)
    assert matrix_to_csv(W) == ",1,2\n,1,1\n2,0,1\n"
    assert matrix_to_csv(ExactMatrix.from_rows([[1, 2]])) == "1,2\n"
    d = matrix_to_dict(W)
    assert d == {"rows": 2, "cols": 2, "entries": [[1, 1], [0, 1]],
                 "row_labels": ["", "2"], "col_labels": ["1", "2"]}
    assert matrix_to_json(W).startswith('{"rows": 2')


def test_numbers():
    assert format_number(Fraction(6, 4)) == "3/2"
    assert format_number(7) == "7"
    assert parse_number(" -3/6 ") == Fraction(-1, 2)
    assert parse_number("4/2") == 2 and isinstance(parse_number("4/2"), int)


def test_vectors():
    text = vector_to_text([1, Fraction(1, 2)], [(1,), ()])
    assert text == "1 #1\n1/2 #\n"
    assert vector_from_text(text) == ([1, Fraction(1, 2)], [(1,), ()])
    assert vector_from_text("3\n\n-2\n") == ([3, -2], None)
    assert vector_to_text([]) == ""
    with pytest.raises(ValueError):
        vector_from_text("1\nabc\n")
    with pytest.raises(ValueError):
        vector_to_text([1], [(1,), (2,)])
