"""Finite commutative ternary Gamma-semirings: validation, enumeration and analysis."""

__version__ = "0.1.0"
