"""
Formats package for ihcalc.

This package contains the textual formats: the circuit language (dsl) and
the matrix/subspace text and JSON formats (matrix).
"""

from . import dsl
from . import matrix

__all__ = ["dsl", "matrix"]
