"""Tests for :py:mod:`instcone.linalg`."""

from fractions import Fraction

import pytest

from instcone import linalg


@pytest.mark.parametrize(
    ("text", "expected"),
    (
        ("1", Fraction(1)),
        ("-6/4", Fraction(-3, 2)),
        (" 2 / 3 ", Fraction(2, 3)),
        ("+5", Fraction(5)),
        (0, Fraction(0)),
    ),
)
def test_parse_rational(text, expected):
    """Test that exact rational literals are read and reduced."""
    assert linalg.parse_rational(text) == expected


@pytest.mark.parametrize(
    "text",
    ("1.5", "1/0", "a/b", "", True, 0.5, None),
)
def test_parse_rational_rejects(text):
    """Test that anything but ``p/q`` literals and ints is refused."""
    with pytest.raises(ValueError):
        linalg.parse_rational(text)


@pytest.mark.parametrize(
    ("value", "expected"),
    (
        (Fraction(3, -6), "-1/2"),
        (Fraction(8, 4), "2"),
        (0, "0"),
        (-7, "-7"),
    ),
)
def test_format_rational(value, expected):
    """Test that rationals render without floats."""
    assert linalg.format_rational(value) == expected


@pytest.mark.parametrize(
    ("value", "doubled", "grading"),
    (
        (3, 6, Fraction(3)),
        (Fraction(-1, 2), -1, Fraction(-1, 2)),
        ("5/2", 5, Fraction(5, 2)),
        ("-2", -4, Fraction(-2)),
    ),
)
def test_double_and_halve(value, doubled, grading):
    """Test the conversions between gradings and doubled gradings."""
    assert linalg.double(value) == doubled
    assert linalg.halve(doubled) == grading


@pytest.mark.parametrize("value", (Fraction(1, 3), "1/4"))
def test_double_rejects_non_halves(value):
    """Test that only integers and half-integers are gradings."""
    with pytest.raises(ValueError):
        linalg.double(value)


@pytest.mark.parametrize(
    ("rows", "expected"),
    (
        ([], 0),
        ([[0, 0], [0, 0]], 0),
        ([[1, 2], [2, 4]], 1),
        ([[1, 0], [0, 1]], 2),
        ([[Fraction(1, 2), Fraction(1, 3)], [3, 2]], 1),
        ([[2, 4, 6], [1, 0, 1], [3, 4, 7]], 2),
        ([[0, 1, 0], [0, 0, 1], [1, 0, 0], [1, 1, 1]], 3),
        ([{0: 1, 5: -1}, {5: 1}], 2),
        ([[4, -2], [-6, 3]], 1),
    ),
)
def test_rank(rows, expected):
    """Test exact ranks of small matrices, including dependent rows."""
    assert linalg.rank(rows) == expected


def test_rank_of_large_entries():
    """Test that big integer pivots stay exact."""
    big = 10 ** 30
    rows = [[big, 1], [big + 1, 1], [1, 0]]
    assert linalg.rank(rows) == 2
    assert linalg.rank([[big, big + 1], [2 * big, 2 * big + 2]]) == 1


def test_echelon_basis_coordinates():
    """Test that coordinates refer to the vectors in insertion order."""
    basis = linalg.EchelonBasis()
    assert basis.add({0: 1, 1: 1})
    assert basis.add({1: 1})
    assert not basis.add({0: 2, 1: 5})
    assert len(basis) == 2
    assert basis.accepted == [0, 1]
    assert basis.coordinates({0: 2, 1: 5}) == {0: 2, 1: 3}
    assert basis.coordinates({2: 1}) is None
    assert basis.contains({0: -1})
    assert basis.pivots == [0, 1]


def test_nullspace_dimension():
    """Test that the kernel has one vector per free column."""
    rows = [[1, 1, 0, 0], [0, 0, 1, 1]]
    kernel = linalg.nullspace(rows, range(4))
    assert len(kernel) == 2
    for vector in kernel:
        for row in rows:
            assert sum(row[col] * value for col, value in vector.items()) == 0


def test_nullspace_of_zero_matrix():
    """Test that an empty matrix has the whole space as kernel."""
    assert linalg.nullspace([], [3, 7]) == [{3: 1}, {7: 1}]


@pytest.mark.parametrize(
    ("left", "right", "width", "expected"),
    (
        ([[1, 2]], [[3], [4]], None, [[11]]),
        ([[1, 0], [0, 2]], [[1, 1], [1, -1]], None, [[1, 1], [2, -2]]),
        ([[]], [], 2, [[0, 0]]),
        ([], [[1, 2]], None, []),
    ),
)
def test_matmul(left, right, width, expected):
    """Test dense products, with and without inner dimension."""
    assert linalg.matmul(left, right, width) == expected


@pytest.mark.parametrize(
    ("rows", "columns", "expected"),
    (
        (
            [[2, 4, 0, 2], [0, 0, 1, 3]],
            range(4),
            [{0: -2, 1: 1}, {0: -1, 2: -3, 3: 1}],
        ),
        ([{3: 1, 7: 1}], [3, 5, 7], [{5: 1}, {3: -1, 7: 1}]),
        ([[1, 0], [0, 3]], range(2), []),
    ),
)
def test_nullspace_is_unit_on_free_columns(rows, columns, expected):
    """Test that each kernel vector is one on its free column only."""
    kernel = linalg.nullspace(rows, columns)
    assert kernel == expected
    assert all(isinstance(v, Fraction) for vector in kernel for v in vector.values())


def test_rref_with_rational_entries():
    """Test that the reduced rows come back as fractions."""
    reduced, pivots = linalg.rref([[Fraction(1, 2), 1], [Fraction(1, 3), 1]])
    assert pivots == [0, 1]
    assert reduced == [{0: 1}, {1: 1}]
    assert all(
        type(value) is Fraction for row in reduced for value in row.values()
    )


def test_echelon_basis_rows_follow_growth():
    """Test that reduced rows are refreshed after the span grows."""
    basis = linalg.EchelonBasis([{0: 1, 2: 1}])
    assert basis.rows == [{0: 1, 2: 1}]
    assert basis.add({2: 2})
    assert basis.rows == [{0: 1}, {2: 1}]
    assert basis.coordinates({0: 1}) == {0: 1, 1: Fraction(-1, 2)}


def test_echelon_basis_extend_skips_dependent_vectors():
    """Test that a batch keeps the first independent vectors in order."""
    basis = linalg.EchelonBasis([{0: 1}])
    accepted = basis.extend([{0: 3}, {}, {1: 1}, {0: 1, 1: 1}, {2: 2}])
    assert accepted == [3, 5]
    assert basis.accepted == [0, 3, 5]
    assert basis.coordinates({0: 1, 1: 1, 2: 1}) == {
        0: 1,
        3: 1,
        5: Fraction(1, 2),
    }
    assert basis.add({0: 5, 2: 1}) is False
