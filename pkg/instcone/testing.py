"""Pytest fixtures and other helpers for testing code built on instcone."""

import pytest

from . import catalog
from .knot import save


RANDOM_SEEDS = range(50)
"""Seeds of the random knots covered by :py:func:`random_knot_data`."""


@pytest.fixture
def unknot_data():
    """Return the built-in unknot model."""
    return catalog.unknot()


@pytest.fixture
def trefoil_neg_data():
    """Return the built-in left-handed trefoil model."""
    return catalog.trefoil_neg()


@pytest.fixture
def trefoil_pos_data():
    """Return the built-in right-handed trefoil model."""
    return catalog.trefoil_pos()


@pytest.fixture
def box_data():
    """Return the built-in model with tau = 0 and nu = 1."""
    return catalog.box()


@pytest.fixture(params=catalog.names())
def catalog_knot(request):
    """Return each built-in model in turn."""
    return catalog.get(request.param)


@pytest.fixture(params=RANDOM_SEEDS, ids="random-{0}".format)
def random_knot_data(request):
    """Return each seeded random knot in turn."""
    return catalog.random_knot(request.param)


@pytest.fixture
def knot_file(tmp_path):
    """Return a factory writing knot data to a JSON file.

    The factory takes the knot data and returns the path as a string.
    """

    def write(knot):
        path = tmp_path / "{name}.json".format(name=knot.name)
        save(knot, path)
        return str(path)

    return write
