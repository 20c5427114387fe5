"""
Utilities package for ihcalc.

This package contains helper functions, configuration, preferences, and exceptions.
"""

from .helpers import (
    setup_logger,
    read_source,
    strip_comment,
)

from .config import (
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    OUTPUT_FORMATS,
    TheoryConfig,
    get_config_dir,
)

from .exceptions import (
    IHCalcError,
    DimensionMismatchError,
    NonSquareMatrixError,
    DivisionByZeroError,
    FormatError,
    MatrixFormatError,
    CircuitError,
    CircuitParseError,
    UnknownAtomError,
    CircuitTypeError,
    SemanticDomainError,
    NotAMatrixError,
    BoundaryError,
    TheoryError,
    UnknownAxiomError,
)

from .prefs import (
    load_prefs,
    save_prefs,
)

__all__ = [
    # Helpers
    "setup_logger",
    "read_source",
    "strip_comment",
    # Config
    "DEFAULT_OUTPUT_FORMAT",
    "DEFAULT_SEED",
    "OUTPUT_FORMATS",
    "TheoryConfig",
    "get_config_dir",
    # Exceptions
    "IHCalcError",
    "DimensionMismatchError",
    "NonSquareMatrixError",
    "DivisionByZeroError",
    "FormatError",
    "MatrixFormatError",
    "CircuitError",
    "CircuitParseError",
    "UnknownAtomError",
    "CircuitTypeError",
    "SemanticDomainError",
    "NotAMatrixError",
    "BoundaryError",
    "TheoryError",
    "UnknownAxiomError",
    # Prefs
    "load_prefs",
    "save_prefs",
]
