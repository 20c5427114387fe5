"""
Exact dense matrices over the integers.

Matrices are the arrows of Mat(Z): an m x n matrix is an arrow n -> m, so
sequential composition is ``b @ a`` and the monoidal product is the direct
sum. Zero-dimensional matrices (0 x n, n x 0, 0 x 0) are ordinary values.

The module provides Hermite normal forms by unimodular column operations,
integer kernels, pullbacks and pushouts, and the span/cospan algebra built
on them.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence

import numpy as np
import sympy

from .exactnum import xgcd
from ..utils.exceptions import DimensionMismatchError, NonSquareMatrixError
from ..utils.helpers import setup_logger

logger = setup_logger(__name__)


# ============================================================================
# Dense matrix container
# ============================================================================
class DenseMatrix:
    """
    Immutable row-major matrix over an exact ring.

    Entries live in a read-only numpy array of dtype ``object`` so that Python
    integers and fractions keep arbitrary precision. Subclasses fix the ring
    by choosing ``_coerce``.
    """

    __slots__ = ("_a",)
    _coerce: Callable[[Any], Any] = staticmethod(lambda x: x)

    def __init__(self, rows: int, cols: int, entries: Iterable[Any] = ()):
        entries = [self._coerce(x) for x in entries]
        if rows < 0 or cols < 0:
            raise ValueError(f"negative shape {rows}x{cols}")
        if len(entries) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        arr = np.empty((rows, cols), dtype=object)
        for k, x in enumerate(entries):
            arr[k // cols, k % cols] = x
        self._freeze(arr)

    def _freeze(self, arr: np.ndarray) -> None:
        arr.flags.writeable = False
        self._a = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray):
        """Adopt an object array without re-validating it."""
        obj = cls.__new__(cls)
        out = np.empty(arr.shape, dtype=object)
        for (i, j), x in np.ndenumerate(arr):
            out[i, j] = cls._coerce(x)
        obj._freeze(out)
        return obj

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: Optional[int] = None):
        """Build from a list of rows; ``cols`` is required when there are no rows."""
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError(f"ragged rows: expected {cols} entries, got {len(r)}")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], rows: Optional[int] = None):
        """Build from a list of columns; ``rows`` is required when there are no columns."""
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("rows must be given for a matrix with no columns")
            rows = len(columns[0])
        for c in columns:
            if len(c) != rows:
                raise ValueError(f"ragged columns: expected {rows} entries, got {len(c)}")
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, [0] * (rows * cols))

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major entries."""
        return tuple(self._a.flat)

    @property
    def array(self) -> np.ndarray:
        """The underlying read-only object array."""
        return self._a

    def __getitem__(self, idx: tuple[int, int]):
        return self._a[idx]

    def row(self, i: int) -> list:
        return list(self._a[i, :])

    def column(self, j: int) -> list:
        return list(self._a[:, j])

    def to_rows(self) -> list[list]:
        return [list(r) for r in self._a]

    def to_columns(self) -> list[list]:
        return [list(self._a[:, j]) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._a.flat)

    def to_sympy(self) -> sympy.Matrix:
        """Copy into a mutable sympy matrix of Rationals."""
        return sympy.Matrix(
            self.rows, self.cols,
            [sympy.Rational(x.numerator, x.denominator) for x in self._a.flat],
        )

    @classmethod
    def from_sympy(cls, m: sympy.MatrixBase):
        """Adopt a sympy matrix whose entries are rational numbers."""
        return cls(m.rows, m.cols, [_from_sympy_entry(x) for x in m])

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    @property
    def T(self):
        return type(self)._wrap(self._a.T)

    def transpose(self):
        return self.T

    def __matmul__(self, other: "DenseMatrix"):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError("mul", self.shape, other.shape)
        cls = _result_type(self, other)
        if self.cols == 0:
            return cls.zeros(self.rows, other.cols)
        return cls._wrap(np.dot(self._a, other._a))

    def __add__(self, other: "DenseMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError("add", self.shape, other.shape)
        return _result_type(self, other)._wrap(self._a + other._a)

    def __sub__(self, other: "DenseMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError("sub", self.shape, other.shape)
        return _result_type(self, other)._wrap(self._a - other._a)

    def __neg__(self):
        return type(self)._wrap(-self._a)

    def scale(self, k):
        return type(self)._wrap(self._a * k)

    def apply(self, v: Sequence[Any]) -> list:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionMismatchError("apply", self.shape, (len(v), 1))
        return [sum((self._a[i, j] * v[j] for j in range(self.cols)), self._coerce(0))
                for i in range(self.rows)]

    # ------------------------------------------------------------------
    # Comparison and display
    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.rows}, {self.cols}, {list(self.entries)!r})"


def _from_sympy_entry(x: Any) -> Any:
    x = sympy.Rational(x)
    p, q = int(x.p), int(x.q)
    return p if q == 1 else Fraction(p, q)


def _result_type(a: DenseMatrix, b: DenseMatrix) -> type:
    # A rational operand makes the result rational.
    if type(a) is type(b):
        return type(a)
    return type(b) if issubclass(type(b), type(a)) or type(a) is MatZ else type(a)


class MatZ(DenseMatrix):
    """Dense integer matrix; an arrow cols -> rows of Mat(Z)."""

    __slots__ = ()
    _coerce = staticmethod(operator.index)


# ============================================================================
# Core matrix operations
# ============================================================================
def mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Matrix product ``a @ b`` (the composite ``b ; a`` as arrows)."""
    return a @ b


def transpose(a: DenseMatrix) -> DenseMatrix:
    return a.T


def identity(n: int) -> MatZ:
    return MatZ.identity(n)


def zero(rows: int, cols: int) -> MatZ:
    return MatZ.zeros(rows, cols)


def negate(a: DenseMatrix) -> DenseMatrix:
    return -a


def hstack(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """The matrix (A|B) out of a biproduct: equal row counts, columns side by side."""
    if a.rows != b.rows:
        raise DimensionMismatchError("hstack", a.shape, b.shape)
    return _result_type(a, b)._wrap(np.hstack([a.array, b.array]))


def vstack(c: DenseMatrix, d: DenseMatrix) -> DenseMatrix:
    """The matrix (C/D) into a biproduct: equal column counts, C above D."""
    if c.cols != d.cols:
        raise DimensionMismatchError("vstack", c.shape, d.shape)
    return _result_type(c, d)._wrap(np.vstack([c.array, d.array]))


def direct_sum(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Block diagonal matrix with ``a`` top-left and ``b`` bottom-right."""
    cls = _result_type(a, b)
    arr = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=object)
    arr[:a.rows, :a.cols] = a.array
    arr[a.rows:, a.cols:] = b.array
    return cls._wrap(arr)


def permutation_matrix(targets: Sequence[int]) -> MatZ:
    """
    Matrix of the permutation sending coordinate i to coordinate ``targets[i]``.

    As an arrow n -> n it routes input wire i to output wire targets[i].
    """
    n = len(targets)
    if sorted(targets) != list(range(n)):
        raise ValueError(f"not a permutation: {list(targets)}")
    entries = [0] * (n * n)
    for i, t in enumerate(targets):
        entries[t * n + i] = 1
    return MatZ(n, n, entries)


# ============================================================================
# Hermite normal form
# ============================================================================
@dataclass(frozen=True)
class HnfResult:
    """
    Column Hermite normal form ``h = a @ u``.

    ``r`` counts the leading zero columns of ``h`` and ``pivot_rows[t]`` is the
    (0-based) pivot row of column ``r + t``.
    """
    h: MatZ
    u: MatZ
    r: int
    pivot_rows: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)


def _combine(cols: list[list[int]], p: int, q: int, x: int, y: int, s: int, t: int) -> None:
    # (col_p, col_q) <- (x col_p + y col_q, s col_p + t col_q)
    cp, cq = cols[p], cols[q]
    cols[p] = [x * a + y * b for a, b in zip(cp, cq)]
    cols[q] = [s * a + t * b for a, b in zip(cp, cq)]


def _axpy(cols: list[list[int]], j: int, p: int, t: int) -> None:
    # col_j <- col_j - t col_p
    cols[j] = [a - t * b for a, b in zip(cols[j], cols[p])]


def hnf(a: MatZ) -> HnfResult:
    """
    Reduced column Hermite normal form with its unimodular transform.

    Rows are scanned bottom-up. For each row the active columns are merged by
    extended-gcd column operations until only the rightmost active column is
    nonzero there; that column becomes a pivot, is made positive, and the
    entries to its right in the pivot row are reduced into [0, pivot).
    The result is unique in the column-equivalence class of ``a``.
    """
    m, n = a.shape
    h = a.to_columns()
    u = MatZ.identity(n).to_columns()
    active = n
    pivots: list[int] = []

    for i in reversed(range(m)):
        if active == 0:
            break
        p = active - 1
        for q in range(p - 1, -1, -1):
            b = h[q][i]
            if b == 0:
                continue
            g, x, y = xgcd(h[p][i], b)
            s, t = -b // g, h[p][i] // g
            _combine(h, p, q, x, y, s, t)
            _combine(u, p, q, x, y, s, t)
        piv = h[p][i]
        if piv == 0:
            continue
        if piv < 0:
            h[p] = [-v for v in h[p]]
            u[p] = [-v for v in u[p]]
            piv = -piv
        for j in range(p + 1, n):
            t = h[j][i] // piv
            if t:
                _axpy(h, j, p, t)
                _axpy(u, j, p, t)
        pivots.append(i)
        active -= 1

    logger.debug(f"hnf of {m}x{n}: r={active}, pivots={pivots[::-1]}")
    return HnfResult(
        h=MatZ.from_columns(h, rows=m),
        u=MatZ.from_columns(u, rows=n),
        r=active,
        pivot_rows=tuple(reversed(pivots)),
    )


def is_hnf(a: DenseMatrix) -> Optional[tuple[int, list[int]]]:
    """
    Check the three Hermite normal form conditions.

    Returns ``(r, pivot_rows)`` (0-based rows) when the leading r columns are
    zero and every later column i has a last nonzero row f(i) with f strictly
    increasing; returns None otherwise.
    """
    m, n = a.shape
    cols = a.to_columns()
    r = 0
    while r < n and all(x == 0 for x in cols[r]):
        r += 1
    pivot_rows: list[int] = []
    for i in range(r, n):
        nonzero = [row for row in range(m) if cols[i][row] != 0]
        if not nonzero:
            return None
        pivot_rows.append(nonzero[-1])
    if any(pivot_rows[t] >= pivot_rows[t + 1] for t in range(len(pivot_rows) - 1)):
        return None
    # Triangularity: the pivot row of column i vanishes left of i.
    for t, row in enumerate(pivot_rows):
        if any(cols[j][row] != 0 for j in range(r + t)):
            return None
    return r, pivot_rows


def is_canonical_hnf(a: DenseMatrix) -> bool:
    """HNF with positive pivots and pivot rows reduced into [0, pivot) to the right."""
    found = is_hnf(a)
    if found is None:
        return False
    r, pivot_rows = found
    for t, row in enumerate(pivot_rows):
        piv = a[row, r + t]
        if piv <= 0:
            return False
        if any(not (0 <= a[row, j] < piv) for j in range(r + t + 1, a.cols)):
            return False
    return True


def rank(a: MatZ) -> int:
    """Rank over the rationals (equal to the number of HNF pivots)."""
    return hnf(a).rank


# ============================================================================
# Kernels, determinants, integer solving
# ============================================================================
def _sign_canonical(column: list[int]) -> list[int]:
    for x in column:
        if x != 0:
            return column if x > 0 else [-v for v in column]
    return column


def kernel_basis(a: MatZ) -> MatZ:
    """
    A Z-basis of {x : a x = 0} as the columns of a cols x r matrix.

    The columns are the first r columns of the HNF transform, each with its
    first nonzero entry made positive.
    """
    res = hnf(a)
    columns = [_sign_canonical(res.u.column(j)) for j in range(res.r)]
    return MatZ.from_columns(columns, rows=a.cols)


def det(a: MatZ) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise NonSquareMatrixError("det", a.shape)
    if a.rows == 0:
        return 1
    return int(a.to_sympy().det(method="bareiss"))


def is_unimodular(u: MatZ) -> bool:
    return u.rows == u.cols and abs(det(u)) == 1


def solve_z(a: MatZ, b: Sequence[int]) -> Optional[list[int]]:
    """
    Some integer x with a x = b, or None when no integer solution exists.

    With a u = h in HNF, back-substitution through the pivot rows of h solves
    h y = b uniquely on the pivot columns; x = u y.
    """
    if len(b) != a.rows:
        raise DimensionMismatchError("solve_z", a.shape, (len(b), 1))
    res = hnf(a)
    h = res.h
    y = [0] * a.cols
    for t in reversed(range(len(res.pivot_rows))):
        col = res.r + t
        row = res.pivot_rows[t]
        rest = sum(h[row, j] * y[j] for j in range(col + 1, a.cols))
        num = b[row] - rest
        if num % h[row, col] != 0:
            return None
        y[col] = num // h[row, col]
    if h.apply(y) != list(b):
        return None
    return res.u.apply(y)


# ============================================================================
# Pullbacks and pushouts
# ============================================================================
def pullback(f: MatZ, g: MatZ) -> tuple[MatZ, MatZ]:
    """
    Pullback of the cospan n -f-> z <-g- m.

    Returns legs (p, q) with f @ p = g @ q, read off the kernel of (f | -g).
    """
    if f.rows != g.rows:
        raise DimensionMismatchError("pullback", f.shape, g.shape)
    k = kernel_basis(hstack(f, -g))
    top = MatZ.from_rows(k.to_rows()[:f.cols], cols=k.cols)
    bottom = MatZ.from_rows(k.to_rows()[f.cols:], cols=k.cols)
    return top, bottom


def pushout(f: MatZ, g: MatZ) -> tuple[MatZ, MatZ]:
    """
    Pushout of the span n <-f- z -g-> m, as transposed pullback of transposes.

    Returns legs (p, q) with p @ f = q @ g.
    """
    if f.cols != g.cols:
        raise DimensionMismatchError("pushout", f.shape, g.shape)
    p, q = pullback(f.T, g.T)
    return p.T, q.T


# ============================================================================
# Spans and cospans
# ============================================================================
@dataclass(frozen=True)
class SpanZ:
    """A span n <-left- z -right-> m of integer matrices."""
    left: MatZ
    right: MatZ

    def __post_init__(self):
        if self.left.cols != self.right.cols:
            raise DimensionMismatchError("span", self.left.shape, self.right.shape)

    @property
    def n(self) -> int:
        return self.left.rows

    @property
    def m(self) -> int:
        return self.right.rows

    @property
    def z(self) -> int:
        return self.left.cols

    def recoordinatize(self, u: MatZ) -> "SpanZ":
        """The same span with its middle object re-based by ``u``."""
        return SpanZ(self.left @ u, self.right @ u)


@dataclass(frozen=True)
class CospanZ:
    """A cospan n -left-> z <-right- m of integer matrices."""
    left: MatZ
    right: MatZ

    def __post_init__(self):
        if self.left.rows != self.right.rows:
            raise DimensionMismatchError("cospan", self.left.shape, self.right.shape)

    @property
    def n(self) -> int:
        return self.left.cols

    @property
    def m(self) -> int:
        return self.right.cols

    @property
    def z(self) -> int:
        return self.left.rows

    def recoordinatize(self, u: MatZ) -> "CospanZ":
        return CospanZ(u @ self.left, u @ self.right)


def kappa1(a: MatZ) -> SpanZ:
    """Span (id, A) of a matrix arrow A: n -> m."""
    return SpanZ(MatZ.identity(a.cols), a)


def kappa2(a: MatZ) -> SpanZ:
    """Span (A, id) of an opposite arrow, i.e. a matrix A read from A.rows to A.cols."""
    return SpanZ(a, MatZ.identity(a.cols))


def iota1(a: MatZ) -> CospanZ:
    """Cospan (A, id) of a matrix arrow A: n -> m."""
    return CospanZ(a, MatZ.identity(a.rows))


def iota2(a: MatZ) -> CospanZ:
    """Cospan (id, A) of an opposite arrow from A.rows to A.cols."""
    return CospanZ(MatZ.identity(a.rows), a)


def span_identity(n: int) -> SpanZ:
    return kappa1(MatZ.identity(n))


def cospan_identity(n: int) -> CospanZ:
    return iota1(MatZ.identity(n))


def span_iso(s1: SpanZ, s2: SpanZ) -> bool:
    """
    Isomorphism of spans.

    Two spans are isomorphic iff one unimodular U has (A/B) U = (C/D), i.e. the
    stacked legs are column-equivalent and so share their canonical HNF.
    """
    if (s1.n, s1.m, s1.z) != (s2.n, s2.m, s2.z):
        return False
    return hnf(vstack(s1.left, s1.right)).h == hnf(vstack(s2.left, s2.right)).h


def cospan_iso(c1: CospanZ, c2: CospanZ) -> bool:
    return span_iso(SpanZ(c1.left.T, c1.right.T), SpanZ(c2.left.T, c2.right.T))


def span_compose(s1: SpanZ, s2: SpanZ) -> SpanZ:
    """Compose spans by pulling back the inner cospan."""
    if s1.m != s2.n:
        raise DimensionMismatchError("span_compose", (s1.n, s1.m), (s2.n, s2.m))
    p, q = pullback(s1.right, s2.left)
    return SpanZ(s1.left @ p, s2.right @ q)


def cospan_compose(c1: CospanZ, c2: CospanZ) -> CospanZ:
    """Compose cospans by pushing out the inner span."""
    if c1.m != c2.n:
        raise DimensionMismatchError("cospan_compose", (c1.n, c1.m), (c2.n, c2.m))
    p, q = pushout(c1.right, c2.left)
    return CospanZ(p @ c1.left, q @ c2.right)


def span_tensor(s1: SpanZ, s2: SpanZ) -> SpanZ:
    return SpanZ(direct_sum(s1.left, s2.left), direct_sum(s1.right, s2.right))


def cospan_tensor(c1: CospanZ, c2: CospanZ) -> CospanZ:
    return CospanZ(direct_sum(c1.left, c2.left), direct_sum(c1.right, c2.right))
