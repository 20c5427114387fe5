"""
Core package for ihcalc.

Exact arithmetic, integer matrices and their span/cospan algebra, linear
relations, circuit syntax, semantics, and the equational theory.
"""

from . import exactnum
from . import intmat
from . import linrel
from . import circuit
from . import semantics
from . import theory

__all__ = ["exactnum", "intmat", "linrel", "circuit", "semantics", "theory"]
