"""
ihcalc Core Type Definitions

Provides enums, dataclasses, and type interfaces for the core library.
Centralizes type definitions to avoid circular imports between modules.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional


class OutputFormat(str, Enum):
    """Available CLI output formats."""
    TEXT = "text"
    JSON = "json"

    @classmethod
    def from_string(cls, value: str) -> "OutputFormat":
        """Convert string to OutputFormat with fallback to TEXT."""
        try:
            return cls(value.lower())
        except ValueError:
            return cls.TEXT


class SemanticsKind(str, Enum):
    """Which evaluator denotes a circuit."""
    REL = "rel"
    SPAN = "span"
    COSPAN = "cospan"


class FracOp(str, Enum):
    """Rational arithmetic realized by circuits."""
    MUL = "mul"
    ADD = "add"


class GenKind(str, Enum):
    """The generators of IH over the integers."""
    ADD = "add"
    ZERO = "zero"
    DUP = "dup"
    DEL = "del"
    AMP = "amp"
    COADD = "coadd"
    COZERO = "cozero"
    CODUP = "codup"
    CODEL = "codel"
    COAMP = "coamp"

    @property
    def is_co(self) -> bool:
        """True for the converse (mirrored) generators."""
        return self.value.startswith("co")

    @property
    def has_scalar(self) -> bool:
        return self in (GenKind.AMP, GenKind.COAMP)


class SubspaceTag(str, Enum):
    """The five shapes of a subspace of the rational plane."""
    FULL = "full"
    ZERO = "zero"
    X_AXIS = "x_axis"
    Y_AXIS = "y_axis"
    LINE = "line"


class AxiomStatus(str, Enum):
    """Provenance of a registered equation."""
    TRANSCRIBED = "paper-transcribed"
    RECONSTRUCTED = "reconstructed"


@dataclass(frozen=True)
class Interface:
    """Arity and coarity of a circuit."""
    arity: int
    coarity: int

    def __post_init__(self):
        if self.arity < 0 or self.coarity < 0:
            raise ValueError(f"negative interface {self.arity}->{self.coarity}")

    def __str__(self) -> str:
        return f"{self.arity}->{self.coarity}"


@dataclass(frozen=True)
class Classification:
    """Result of classifying a 1->1 relation."""
    tag: SubspaceTag
    k1: Optional[int] = None
    k2: Optional[int] = None

    @property
    def value(self) -> Optional[Fraction]:
        """
        Read the relation as a rational number.

        A line spanned by (k1, k2) is the slope k2/k1 and the x-axis is 0;
        the other shapes are not numbers.
        """
        if self.tag is SubspaceTag.LINE:
            return Fraction(self.k2, self.k1)
        if self.tag is SubspaceTag.X_AXIS:
            return Fraction(0)
        return None

    def __str__(self) -> str:
        if self.tag is SubspaceTag.LINE:
            return f"line({self.k1},{self.k2})"
        return self.tag.value
