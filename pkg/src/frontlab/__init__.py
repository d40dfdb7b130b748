"""Exact invariants of plane wave fronts and their orbifold analogues."""

__version__ = "0.1.0"
