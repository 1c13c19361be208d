"""Exact R-matrices, path crystals and wall/particle pictures for mixed-spin chains at q = 0."""

__version__ = "0.1.0"
