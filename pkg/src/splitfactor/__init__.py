"""Exact factorization of split-quaternion and motion polynomials."""

__version__ = "0.1.0"
