"""Tests for the built-in models and the random generator."""

import pytest

from instcone import catalog
from instcone.errors import GeneratorFailure, ParseError
from instcone.knot import validate


def test_names():
    """Test that every built-in model is listed."""
    assert catalog.names() == ["unknot", "trefoil-neg", "trefoil-pos", "box"]
    assert [knot.name for knot in catalog.catalog()] == catalog.names()


@pytest.mark.parametrize(
    ("name", "genus", "size"),
    (
        ("unknot", 0, 1),
        ("trefoil-neg", 1, 3),
        ("trefoil-pos", 1, 3),
        ("box", 1, 5),
    ),
)
def test_builtin_shapes(name, genus, size):
    """Test genus and size of the built-in models."""
    knot = catalog.get(name)
    assert knot.name == name
    assert knot.genus == genus
    assert len(knot.space) == size


@pytest.mark.parametrize("name", ("trefoil", "random-", "random-x", "catalog:unknot"))
def test_unknown_names(name):
    """Test that unknown names are parse errors listing the known ones."""
    with pytest.raises(ParseError, match="unknot, trefoil-neg"):
        catalog.get(name)


def test_random_names():
    """Test that ``random-<seed>`` names build seeded complexes."""
    knot = catalog.get("random-7")
    assert knot.name == "random-7"
    assert knot.same_data(catalog.random_knot(7))


def test_random_knot_is_valid(random_knot_data):
    """Test that generated complexes validate and fit the size bound."""
    assert validate(random_knot_data).ok
    assert len(random_knot_data.space) <= catalog.RANDOM_MAX_GENERATORS


def test_random_knot_is_deterministic():
    """Test that a seed always gives the same data."""
    assert catalog.random_knot(11) == catalog.random_knot(11)


def test_random_knots_use_consecutive_seeds():
    """Test the batch helper."""
    knots = catalog.random_knots(3, seed=5)
    assert [knot.name for knot in knots] == ["random-5", "random-6", "random-7"]


def test_generator_failure_is_reported(mocker):
    """Test that invalid generated data is reported, not returned."""
    report = mocker.Mock(ok=False, failures=[mocker.Mock()])
    report.failures[0].name = "alex2 lattice"
    mocker.patch.object(catalog, "validate", return_value=report)
    with pytest.raises(GeneratorFailure, match="alex2 lattice"):
        catalog.random_knot(0)
