"""Exact surgery formulas for instanton homology from bent complex data."""

import logging
from importlib import metadata


try:
    __version__ = metadata.version("instcone")
except Exception:
    __version__ = "unknown"

logging.getLogger(__name__).addHandler(logging.NullHandler())
