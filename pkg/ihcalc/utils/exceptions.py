"""
ihcalc Exception Hierarchy

Defines custom exceptions for better error handling and debugging.
"""


class IHCalcError(Exception):
    """Base exception for all ihcalc errors."""
    pass


def _shape(dims: tuple[int, ...]) -> str:
    return "x".join(map(str, dims))


# ============================================================================
# Arithmetic and Linear Algebra Errors
# ============================================================================
class DimensionMismatchError(IHCalcError, ValueError):
    """Raised when two shapes are incompatible for an operation."""

    def __init__(self, operation: str, left: tuple[int, ...], right: tuple[int, ...]):
        self.operation = operation
        self.left = left
        self.right = right
        super().__init__(
            f"{operation}: incompatible shapes {_shape(left)} and {_shape(right)}"
        )


class NonSquareMatrixError(DimensionMismatchError):
    """Raised when a square matrix is required."""

    def __init__(self, operation: str, shape: tuple[int, int]):
        super().__init__(operation, shape, shape)
        self.args = (f"{operation}: matrix must be square, got {_shape(shape)}",)


class DivisionByZeroError(IHCalcError, ZeroDivisionError):
    """Raised on exact division by zero."""
    pass


# ============================================================================
# File Format Errors
# ============================================================================
class FormatError(IHCalcError):
    """Base exception for malformed textual input."""
    pass


class MatrixFormatError(FormatError):
    """Raised when a matrix file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class PreferenceError(FormatError):
    """Raised when a preference key or value is not recognised."""
    pass


# ============================================================================
# Circuit Errors
# ============================================================================
class CircuitError(IHCalcError):
    """Base exception for circuit-related errors."""
    pass


class CircuitParseError(CircuitError, FormatError):
    """Raised when circuit text does not match the grammar."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class UnknownAtomError(CircuitParseError):
    """Raised when an identifier is not a known generator."""
    pass


class CircuitTypeError(CircuitError):
    """Raised when a sequential composite has mismatched interfaces."""

    def __init__(self, subterm: str, left: str, right: str):
        self.subterm = subterm
        self.left = left
        self.right = right
        super().__init__(
            f"cannot compose {left} with {right} in {subterm}"
        )


# ============================================================================
# Semantic Errors
# ============================================================================
class SemanticDomainError(IHCalcError):
    """Base exception for values outside an operation's semantic domain."""
    pass


class NotAMatrixError(SemanticDomainError):
    """Raised when a relation is not the graph of an integer matrix."""
    pass


class BoundaryError(SemanticDomainError):
    """Raised when a relation has the wrong boundary dimensions."""
    pass


# ============================================================================
# Theory Errors
# ============================================================================
class TheoryError(IHCalcError):
    """Base exception for axiom registry errors."""
    pass


class UnknownAxiomError(TheoryError, KeyError):
    """Raised when an axiom lookup fails."""
    pass
