"""Verification laboratory for Fekete-Szego bounds on concave univalent functions."""

__version__ = "0.1.0"
