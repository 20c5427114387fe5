"""
Linear relations over the rationals.

A relation n -> m is a subspace of Q^n x Q^m, stored as a canonical
reduced-row-echelon basis so that equality of relations is equality of
values. Coordinates 0..n-1 are the left boundary and n..n+m-1 the right.

The maps ``phi`` (span to joint image) and ``psi`` (cospan to equalizer)
connect the integer span/cospan algebra to relations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import clear_denominators
from .intmat import (
    CospanZ,
    DenseMatrix,
    MatZ,
    SpanZ,
    hstack,
    permutation_matrix,
    pushout,
    vstack,
)
from .types import Classification, SubspaceTag
from ..utils.exceptions import (
    BoundaryError,
    DimensionMismatchError,
    NonSquareMatrixError,
)
from ..utils.helpers import setup_logger

logger = setup_logger(__name__)


class MatQ(DenseMatrix):
    """Dense rational matrix; an arrow cols -> rows of Mat(Q)."""

    __slots__ = ()
    _coerce = staticmethod(Fraction)

    @classmethod
    def from_matz(cls, a: DenseMatrix) -> "MatQ":
        return cls(a.rows, a.cols, a.entries)


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan through sympy; returns the nonzero RREF rows and pivot columns."""
    if not rows or ncols == 0:
        return [], []
    reduced, pivots = MatQ.from_rows(rows, cols=ncols).to_sympy().rref()
    if not pivots:
        return [], []
    return MatQ.from_sympy(reduced[:len(pivots), :]).to_rows(), list(pivots)


def rref(a: DenseMatrix) -> tuple[MatQ, int]:
    """
    Reduced row echelon form and rank.

    The returned matrix keeps the shape of ``a``; rows past the rank are zero.
    """
    q = MatQ.from_matz(a)
    nonzero, pivots = _rref_rows(q.to_rows(), q.cols)
    padding = [[Fraction(0)] * q.cols for _ in range(q.rows - len(nonzero))]
    return MatQ.from_rows(nonzero + padding, cols=q.cols), len(pivots)


# ============================================================================
# Subspaces and relations
# ============================================================================
@dataclass(frozen=True)
class Subspace:
    """
    A subspace of Q^ambient in canonical form.

    ``basis`` is rank x ambient, in reduced row echelon form with no zero rows.
    Build through ``subspace_from_generators``; two values are equal exactly
    when they denote the same subspace.
    """
    ambient: int
    basis: MatQ

    def __post_init__(self):
        if self.basis.cols != self.ambient:
            raise DimensionMismatchError("subspace", (self.ambient,), self.basis.shape)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[list[Fraction]]:
        return self.basis.to_rows()

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatchError("contains", (self.ambient,), (len(v),))
        extended = subspace_from_generators(self.ambient, self.vectors() + [list(v)])
        return extended.dim == self.dim


def subspace_from_generators(ambient: int, vectors: Sequence[Sequence]) -> Subspace:
    """Canonical subspace spanned by ``vectors`` inside Q^ambient."""
    rows = []
    for v in vectors:
        if len(v) != ambient:
            raise DimensionMismatchError("subspace_from_generators", (ambient,), (len(v),))
        rows.append([Fraction(x) for x in v])
    basis, _ = _rref_rows(rows, ambient)
    return Subspace(ambient, MatQ.from_rows(basis, cols=ambient))


def column_space(a: DenseMatrix) -> Subspace:
    return subspace_from_generators(a.rows, a.to_columns())


def kernel_q(a: DenseMatrix) -> Subspace:
    """Canonical Q-kernel {x : a x = 0}."""
    if a.rows == 0:
        return subspace_from_generators(a.cols, MatZ.identity(a.cols).to_rows())
    if a.cols == 0:
        return subspace_from_generators(0, [])
    gens = [MatQ.from_sympy(v).column(0) for v in a.to_sympy().nullspace()]
    return subspace_from_generators(a.cols, gens)


def solve_q(a: DenseMatrix, b: Sequence) -> Optional[list[Fraction]]:
    """Some rational x with a x = b, or None when the system is inconsistent."""
    if len(b) != a.rows:
        raise DimensionMismatchError("solve_q", a.shape, (len(b), 1))
    if a.rows == 0:
        return [Fraction(0)] * a.cols
    if a.cols == 0:
        return [] if all(y == 0 for y in b) else None
    rhs = MatQ(a.rows, 1, b).to_sympy()
    try:
        sol, params = a.to_sympy().gauss_jordan_solve(rhs)
    except ValueError:
        return None
    # free parameters at zero pick one particular solution
    sol = sol.xreplace({t: 0 for t in params})
    return MatQ.from_sympy(sol).column(0)


def inverse_q(a: DenseMatrix) -> Optional[MatQ]:
    """Exact inverse, or None for a singular matrix."""
    if a.rows != a.cols:
        raise NonSquareMatrixError("inverse_q", a.shape)
    if a.rows == 0:
        return MatQ.zeros(0, 0)
    try:
        return MatQ.from_sympy(a.to_sympy().inv())
    except ValueError:
        return None


@dataclass(frozen=True)
class LinRel:
    """A linear relation n -> m: a subspace of Q^(n+m), left boundary first."""
    n: int
    m: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient != self.n + self.m:
            raise DimensionMismatchError("relation", (self.n, self.m), (self.space.ambient,))

    @property
    def dim(self) -> int:
        return self.space.dim

    def pairs(self) -> list[tuple[list[Fraction], list[Fraction]]]:
        """The basis vectors split into (left, right) parts."""
        return [(v[:self.n], v[self.n:]) for v in self.space.vectors()]

    def __str__(self) -> str:
        return f"LinRel {self.n}->{self.m}, dim {self.dim}"


def relation(n: int, m: int, vectors: Sequence[Sequence]) -> LinRel:
    """The relation n -> m spanned by the given (n+m)-vectors."""
    return LinRel(n, m, subspace_from_generators(n + m, vectors))


def graph(a: DenseMatrix) -> LinRel:
    """{(x, a x)} as a relation a.cols -> a.rows."""
    n = a.cols
    gens = []
    for j in range(n):
        unit = [0] * n
        unit[j] = 1
        gens.append(unit + list(a.column(j)))
    return relation(n, a.rows, gens)


def rel_id(n: int) -> LinRel:
    return graph(MatZ.identity(n))


def rel_sym(n: int, m: int) -> LinRel:
    """The symmetry n+m -> m+n: {((x, y), (y, x))}."""
    targets = [m + i for i in range(n)] + list(range(m))
    return graph(permutation_matrix(targets))


def rel_full(n: int, m: int) -> LinRel:
    return LinRel(n, m, subspace_from_generators(n + m, MatZ.identity(n + m).to_rows()))


def rel_zero(n: int, m: int) -> LinRel:
    return relation(n, m, [])


def rel_contains(r: LinRel, x: Sequence, y: Sequence) -> bool:
    if len(x) != r.n or len(y) != r.m:
        raise DimensionMismatchError("rel_contains", (r.n, r.m), (len(x), len(y)))
    return r.space.contains(list(x) + list(y))


def rel_equal(v: LinRel, w: LinRel) -> bool:
    return v == w


def converse(r: LinRel) -> LinRel:
    return relation(r.m, r.n, [y + x for x, y in r.pairs()])


def rel_compose(v: LinRel, w: LinRel) -> LinRel:
    """
    Relational composite {(x, z) : exists y, (x, y) in v and (y, z) in w}.

    With generators (x_i, y_i) of v and (y'_j, z_j) of w, the kernel of the
    matrix whose columns are y_i and -y'_j gives the coefficient pairs (a, b)
    that agree in the middle; each yields the generator (sum a_i x_i, sum b_j z_j).
    """
    if v.m != w.n:
        raise BoundaryError(f"cannot compose {v.n}->{v.m} with {w.n}->{w.m}")
    gv, gw = v.pairs(), w.pairs()
    middle = MatQ.from_columns(
        [y for _, y in gv] + [[-t for t in y] for y, _ in gw], rows=v.m
    )
    gens = []
    for coeffs in kernel_q(middle).vectors():
        a, b = coeffs[:len(gv)], coeffs[len(gv):]
        x = [sum((ai * xi[k] for ai, (xi, _) in zip(a, gv)), Fraction(0)) for k in range(v.n)]
        z = [sum((bj * zj[k] for bj, (_, zj) in zip(b, gw)), Fraction(0)) for k in range(w.m)]
        gens.append(x + z)
    logger.debug(f"rel_compose {v.n}->{v.m} ; {w.n}->{w.m}: {len(gens)} generators")
    return relation(v.n, w.m, gens)


def rel_tensor(v: LinRel, w: LinRel) -> LinRel:
    """Direct sum; boundaries are (v.left, w.left) -> (v.right, w.right)."""
    gens = []
    for x, y in v.pairs():
        gens.append(x + [0] * w.n + y + [0] * w.m)
    for x, y in w.pairs():
        gens.append([0] * v.n + x + [0] * v.m + y)
    return relation(v.n + w.n, v.m + w.m, gens)


def orthogonal(s: Subspace) -> Subspace:
    """Orthogonal complement under the standard pairing."""
    return kernel_q(MatQ.from_rows(s.vectors(), cols=s.ambient))


def rel_dual(r: LinRel) -> LinRel:
    """
    The colour-swapped relation {(x, y) : (x, -y) in r^perp}.

    This is the relation of the photographic negative: add and codup trade
    places, as do dup and coadd, zero and codel, del and cozero, amp(k) and
    coamp(k).
    """
    perp = orthogonal(r.space).vectors()
    return relation(r.n, r.m, [v[:r.n] + [-t for t in v[r.n:]] for v in perp])


# ============================================================================
# Spans, cospans and relations
# ============================================================================
def phi(s: SpanZ) -> LinRel:
    """Joint image {(A z, B z)} of a span."""
    return LinRel(s.n, s.m, column_space(vstack(s.left, s.right)))


def psi(c: CospanZ) -> LinRel:
    """Equalizer {(x, y) : A x = B y} of a cospan."""
    return LinRel(c.n, c.m, kernel_q(hstack(c.left, -c.right)))


def rel_to_span(r: LinRel) -> SpanZ:
    """
    Canonical integer span with phi(span) = r.

    Each canonical basis row is scaled to a primitive integer vector and
    becomes a column of the stacked legs, so the middle object has dimension
    dim(r).
    """
    columns = [clear_denominators(v)[0] for v in r.space.vectors()]
    left = MatZ.from_columns([c[:r.n] for c in columns], rows=r.n)
    right = MatZ.from_columns([c[r.n:] for c in columns], rows=r.m)
    return SpanZ(left, right)


def rel_to_cospan(r: LinRel) -> CospanZ:
    """Cospan with psi(cospan) = r, the integer pushout of ``rel_to_span(r)``."""
    s = rel_to_span(r)
    p, q = pushout(s.left, s.right)
    return CospanZ(p, q)


# ============================================================================
# Classification of relations 1 -> 1
# ============================================================================
def classify_1_1(r: LinRel) -> Classification:
    """
    Place a relation 1 -> 1 among the five subspaces of Q^2.

    A line spanned by (k1, k2) with both coordinates nonzero is reported with
    coprime k1 > 0; the axes and the trivial subspaces get their own tags.
    """
    if (r.n, r.m) != (1, 1):
        raise BoundaryError(f"classification needs a 1->1 relation, got {r.n}->{r.m}")
    if r.dim == 2:
        return Classification(SubspaceTag.FULL)
    if r.dim == 0:
        return Classification(SubspaceTag.ZERO)
    a, b = r.space.vectors()[0]
    if a == 0:
        return Classification(SubspaceTag.Y_AXIS)
    if b == 0:
        return Classification(SubspaceTag.X_AXIS)
    (k1, k2), _ = clear_denominators([a, b])
    return Classification(SubspaceTag.LINE, k1, k2)
