"""Exact tools for sigma-Galois groups of linear differential equations
over Q(i)(x) with the shift x -> x + 1."""

__version__ = "0.1.0"
