"""
Circuit syntax for interacting Hopf algebras over the integers.

A circuit is a term over the ten generators (add, zero, dup, del, amp(k) and
their co-partners), identities, the symmetry, and the two compositions:
``Seq(a, b)`` runs ``a`` then ``b`` and ``Tensor(a, b)`` stacks ``a`` above
``b``. Circuits are immutable; interfaces are computed by ``typecheck``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .intmat import MatZ
from .types import GenKind, Interface
from ..utils.exceptions import CircuitTypeError, DivisionByZeroError, NotAMatrixError


class Circuit:
    """Base class of circuit terms."""

    __slots__ = ()

    @property
    def interface(self) -> Interface:
        return typecheck(self)

    def __str__(self) -> str:
        from ..formats.dsl import render
        return render(self)


@dataclass(frozen=True)
class Gen(Circuit):
    """A generator; ``scalar`` is set exactly for amp and coamp."""
    kind: GenKind
    scalar: Optional[int] = None

    def __post_init__(self):
        if self.kind.has_scalar != (self.scalar is not None):
            raise ValueError(f"generator {self.kind.value} with scalar {self.scalar!r}")


@dataclass(frozen=True)
class Id(Circuit):
    n: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative identity width {self.n}")


@dataclass(frozen=True)
class Sym(Circuit):
    """The symmetry swapping two wires."""


@dataclass(frozen=True)
class Seq(Circuit):
    left: Circuit
    right: Circuit


@dataclass(frozen=True)
class Tensor(Circuit):
    top: Circuit
    bottom: Circuit


ADD = Gen(GenKind.ADD)
ZERO = Gen(GenKind.ZERO)
DUP = Gen(GenKind.DUP)
DEL = Gen(GenKind.DEL)
COADD = Gen(GenKind.COADD)
COZERO = Gen(GenKind.COZERO)
CODUP = Gen(GenKind.CODUP)
CODEL = Gen(GenKind.CODEL)
SYM = Sym()


def amp(k: int) -> Gen:
    return Gen(GenKind.AMP, int(k))


def coamp(k: int) -> Gen:
    return Gen(GenKind.COAMP, int(k))


def neg() -> Gen:
    """The antipode amp(-1)."""
    return amp(-1)


_GEN_INTERFACE = {
    GenKind.ADD: (2, 1),
    GenKind.ZERO: (0, 1),
    GenKind.DUP: (1, 2),
    GenKind.DEL: (1, 0),
    GenKind.AMP: (1, 1),
    GenKind.COADD: (1, 2),
    GenKind.COZERO: (1, 0),
    GenKind.CODUP: (2, 1),
    GenKind.CODEL: (0, 1),
    GenKind.COAMP: (1, 1),
}

# Converse partner of each generator.
_MIRROR = {
    GenKind.ADD: GenKind.COADD,
    GenKind.ZERO: GenKind.COZERO,
    GenKind.DUP: GenKind.CODUP,
    GenKind.DEL: GenKind.CODEL,
    GenKind.AMP: GenKind.COAMP,
}
_MIRROR.update({v: k for k, v in _MIRROR.items()})

# Colour swap, orientation kept.
_NEGATIVE = {
    GenKind.ADD: GenKind.CODUP,
    GenKind.DUP: GenKind.COADD,
    GenKind.ZERO: GenKind.CODEL,
    GenKind.DEL: GenKind.COZERO,
    GenKind.AMP: GenKind.COAMP,
}
_NEGATIVE.update({v: k for k, v in _NEGATIVE.items()})


def generator_matrix(g: Gen) -> MatZ:
    """
    The integer matrix underlying a generator.

    For add, zero, dup, del and amp this is the matrix the generator denotes;
    a co-generator shares the matrix of its mirror partner.
    """
    kind = _MIRROR[g.kind] if g.kind.is_co else g.kind
    if kind is GenKind.ADD:
        return MatZ(1, 2, [1, 1])
    if kind is GenKind.ZERO:
        return MatZ.zeros(1, 0)
    if kind is GenKind.DUP:
        return MatZ(2, 1, [1, 1])
    if kind is GenKind.DEL:
        return MatZ.zeros(0, 1)
    return MatZ(1, 1, [g.scalar])


# ============================================================================
# Typing
# ============================================================================
def typecheck(c: Circuit) -> Interface:
    """
    Compute the interface of ``c``.

    Raises:
        CircuitTypeError: when a sequential composite joins mismatched wires
    """
    if isinstance(c, Gen):
        return Interface(*_GEN_INTERFACE[c.kind])
    if isinstance(c, Id):
        return Interface(c.n, c.n)
    if isinstance(c, Sym):
        return Interface(2, 2)
    if isinstance(c, Seq):
        left, right = typecheck(c.left), typecheck(c.right)
        if left.coarity != right.arity:
            raise CircuitTypeError(str(c), str(left), str(right))
        return Interface(left.arity, right.coarity)
    if isinstance(c, Tensor):
        top, bottom = typecheck(c.top), typecheck(c.bottom)
        return Interface(top.arity + bottom.arity, top.coarity + bottom.coarity)
    raise TypeError(f"not a circuit: {c!r}")


def size(c: Circuit) -> int:
    """Number of generator and symmetry occurrences."""
    if isinstance(c, (Gen, Sym)):
        return 1
    if isinstance(c, Id):
        return 0
    if isinstance(c, Seq):
        return size(c.left) + size(c.right)
    return size(c.top) + size(c.bottom)


def depth(c: Circuit) -> int:
    """Longest chain of generators a wire can pass through."""
    if isinstance(c, (Gen, Sym)):
        return 1
    if isinstance(c, Id):
        return 0
    if isinstance(c, Seq):
        return depth(c.left) + depth(c.right)
    return max(depth(c.top), depth(c.bottom))


# ============================================================================
# Smart constructors
# ============================================================================
def seq(*circuits: Circuit) -> Circuit:
    """Left-to-right sequential composite that drops identity factors."""
    kept = [c for c in circuits if not isinstance(c, Id)]
    if not kept:
        return circuits[0] if circuits else Id(0)
    out = kept[0]
    for c in kept[1:]:
        out = Seq(out, c)
    return out


def tensor(*circuits: Circuit) -> Circuit:
    """Top-to-bottom monoidal product; adjacent identities merge and id(0) vanishes."""
    parts: list[Circuit] = []
    for c in circuits:
        if isinstance(c, Id):
            if c.n == 0:
                continue
            if parts and isinstance(parts[-1], Id):
                parts[-1] = Id(parts[-1].n + c.n)
                continue
        parts.append(c)
    if not parts:
        return Id(0)
    return _balanced(Tensor, parts)


def seq_all(circuits: Sequence[Circuit]) -> Circuit:
    """Sequential composite of many layers as a balanced tree."""
    kept = [c for c in circuits if not isinstance(c, Id)]
    if not kept:
        return circuits[0] if circuits else Id(0)
    return _balanced(Seq, kept)


def _balanced(node: type, parts: Sequence[Circuit]) -> Circuit:
    # term depth stays logarithmic in the number of parts
    if len(parts) == 1:
        return parts[0]
    mid = len(parts) // 2
    return node(_balanced(node, parts[:mid]), _balanced(node, parts[mid:]))


# ============================================================================
# Syntactic transforms
# ============================================================================
def mirror(c: Circuit) -> Circuit:
    """Reflect left to right: every generator becomes its converse partner."""
    if isinstance(c, Gen):
        return Gen(_MIRROR[c.kind], c.scalar)
    if isinstance(c, Seq):
        return Seq(mirror(c.right), mirror(c.left))
    if isinstance(c, Tensor):
        return Tensor(mirror(c.top), mirror(c.bottom))
    return c


def pn(c: Circuit) -> Circuit:
    """Photographic negative: swap colours, keep orientation."""
    if isinstance(c, Gen):
        return Gen(_NEGATIVE[c.kind], c.scalar)
    if isinstance(c, Seq):
        return Seq(pn(c.left), pn(c.right))
    if isinstance(c, Tensor):
        return Tensor(pn(c.top), pn(c.bottom))
    return c


# ============================================================================
# Building blocks
# ============================================================================
def fan(k: int) -> Circuit:
    """Copy one wire to k wires: del for 0, id for 1, then a dup on the top wire per extra copy."""
    if k == 0:
        return DEL
    return seq_all([tensor(DUP, Id(width - 2)) for width in range(2, k + 1)] or [Id(1)])


def add_tree(k: int) -> Circuit:
    """Sum k wires to one: zero for 0, id for 1, adding the top two wires first."""
    if k == 0:
        return ZERO
    return seq_all([tensor(ADD, Id(width - 2)) for width in range(k, 1, -1)] or [Id(1)])


def perm(targets: Sequence[int]) -> Circuit:
    """
    Symmetry network sending input wire i to output wire ``targets[i]``.

    Built from odd-even transposition layers; layers without swaps are
    skipped, so the identity permutation is ``id(n)``.
    """
    n = len(targets)
    if sorted(targets) != list(range(n)):
        raise ValueError(f"not a permutation: {list(targets)}")
    arr = list(targets)
    layers: list[Circuit] = []
    parity = 0
    quiet = 0
    while quiet < 2:
        swaps = [p for p in range(parity, n - 1, 2) if arr[p] > arr[p + 1]]
        if swaps:
            quiet = 0
            layers.append(_swap_layer(n, swaps))
            for p in swaps:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
        else:
            quiet += 1
        parity ^= 1
    return seq_all(layers) if layers else Id(n)


def _swap_layer(n: int, swaps: list[int]) -> Circuit:
    parts: list[Circuit] = []
    pos = 0
    for p in swaps:
        parts.append(Id(p - pos))
        parts.append(SYM)
        pos = p + 2
    parts.append(Id(n - pos))
    return tensor(*parts)


def cup(n: int = 1) -> Circuit:
    """0 -> 2n, relating each wire of the first block to the same wire of the second."""
    pairs = tensor(*[seq(CODEL, DUP) for _ in range(n)]) if n else Id(0)
    order = [i // 2 + (n if i % 2 else 0) for i in range(2 * n)]
    return seq(pairs, perm(order))


def cap(n: int = 1) -> Circuit:
    """2n -> 0, the mirror image of ``cup(n)``."""
    return mirror(cup(n))


def frac(p: int, q: int) -> Circuit:
    """The circuit coamp(q);amp(p), denoting the rational p/q."""
    if q == 0:
        raise DivisionByZeroError(f"fraction {p}/0 has no circuit")
    return Seq(coamp(q), amp(p))


def frac_mul(x: Circuit, y: Circuit) -> Circuit:
    return Seq(x, y)


def frac_add(x: Circuit, y: Circuit) -> Circuit:
    return Seq(Seq(DUP, Tensor(x, y)), ADD)


# ============================================================================
# Matrices and circuits
# ============================================================================
def matrix_to_circuit(a: MatZ) -> Circuit:
    """
    Circuit in matrix form denoting the graph of ``a`` (an arrow cols -> rows).

    Each input wire fans out to one copy per nonzero entry of its column, each
    copy is scaled by its entry (scalar 1 is omitted), a symmetry network
    regroups the copies by row, and add-trees sum each row.
    """
    m, n = a.shape
    paths = [(i, j) for j in range(n) for i in range(m) if a[i, j] != 0]
    fanout = tensor(*[fan(sum(1 for i in range(m) if a[i, j] != 0)) for j in range(n)])
    scalars = tensor(*[Id(1) if a[i, j] == 1 else amp(a[i, j]) for i, j in paths])
    by_row = sorted(range(len(paths)), key=lambda t: (paths[t][0], paths[t][1]))
    targets = [0] * len(paths)
    for pos, t in enumerate(by_row):
        targets[t] = pos
    routing = perm(targets)
    sums = tensor(*[add_tree(sum(1 for j in range(n) if a[i, j] != 0)) for i in range(m)])
    if n == 0 and m == 0:
        return Id(0)
    return seq(fanout, scalars, routing, sums)


def circuit_to_matrix(c: Circuit) -> MatZ:
    """
    The integer matrix whose graph ``c`` denotes.

    Raises:
        NotAMatrixError: when the denotation is not a total, single-valued
            relation with integer values
    """
    from .semantics import sem_rel

    r = sem_rel(c)
    vectors = r.space.vectors()
    if r.dim != r.n:
        raise NotAMatrixError(f"relation {r.n}->{r.m} of dimension {r.dim} is not a matrix graph")
    columns = []
    for j, v in enumerate(vectors):
        if v[:r.n] != [int(i == j) for i in range(r.n)]:
            raise NotAMatrixError(f"relation {r.n}->{r.m} is not single-valued")
        if any(x.denominator != 1 for x in v[r.n:]):
            raise NotAMatrixError(f"relation {r.n}->{r.m} has non-integer entries")
        columns.append([int(x) for x in v[r.n:]])
    return MatZ.from_columns(columns, rows=r.m)


def desugar_scalars(c: Circuit) -> Circuit:
    """
    Replace every scalar by a term over add, zero, dup, del, the antipode and
    their co-partners, preserving the denotation.
    """
    if isinstance(c, Gen):
        if c.kind is GenKind.AMP:
            return _desugar_amp(c.scalar)
        if c.kind is GenKind.COAMP:
            return mirror(_desugar_amp(c.scalar))
        return c
    if isinstance(c, Seq):
        return Seq(desugar_scalars(c.left), desugar_scalars(c.right))
    if isinstance(c, Tensor):
        return Tensor(desugar_scalars(c.top), desugar_scalars(c.bottom))
    return c


def _desugar_amp(k: int) -> Circuit:
    if k == 0:
        return Seq(DEL, ZERO)
    if k == 1:
        return Id(1)
    if k == -1:
        return amp(-1)
    if k < 0:
        return Seq(amp(-1), _desugar_amp(-k))
    return Seq(fan(k), add_tree(k))
