"""Pytest configuration module.

Contains fixtures used by the instcone test suite only.
"""

import pytest

from ..testing import (  # noqa: F401  # pylint: disable=unused-import
    box_data,
    catalog_knot,
    knot_file,
    random_knot_data,
    trefoil_neg_data,
    trefoil_pos_data,
    unknot_data,
)
from ..verify import SEED_ENV


@pytest.fixture(autouse=True)
def _clean_seed_env(monkeypatch):
    """Keep a developer's ``INSTCONE_SEED`` out of the tests."""
    monkeypatch.delenv(SEED_ENV, raising=False)
