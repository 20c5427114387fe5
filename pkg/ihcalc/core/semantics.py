"""
Denotational semantics of circuits.

Three evaluators interpret a circuit compositionally: as a linear relation
over the rationals, as a span of integer matrices (composed by pullback) and
as a cospan (composed by pushout). Equality of circuits is decided on the
canonical relation, and the normal forms are read back from it.
"""
from functools import lru_cache
from typing import Optional

from .circuit import (
    Circuit,
    Gen,
    Id,
    Seq,
    Sym,
    Tensor,
    generator_matrix,
    matrix_to_circuit,
    mirror,
    typecheck,
)
from .intmat import (
    CospanZ,
    MatZ,
    SpanZ,
    cospan_compose,
    cospan_identity,
    cospan_tensor,
    direct_sum,
    iota1,
    iota2,
    kappa1,
    kappa2,
    permutation_matrix,
    span_compose,
    span_identity,
    span_tensor,
)
from .linrel import (
    LinRel,
    converse,
    graph,
    rel_compose,
    rel_id,
    rel_sym,
    rel_tensor,
    rel_to_cospan,
    rel_to_span,
)
from ..utils.exceptions import CircuitTypeError, NotAMatrixError
from ..utils.helpers import setup_logger

logger = setup_logger(__name__)

_SWAP = permutation_matrix([1, 0])


@lru_cache(maxsize=256)
def _gen_rel(g: Gen) -> LinRel:
    r = graph(generator_matrix(g))
    return converse(r) if g.kind.is_co else r


def sem_rel(c: Circuit) -> LinRel:
    """The linear relation denoted by ``c``."""
    typecheck(c)
    return _rel(c)


def _rel(c: Circuit) -> LinRel:
    if isinstance(c, Gen):
        return _gen_rel(c)
    if isinstance(c, Id):
        return rel_id(c.n)
    if isinstance(c, Sym):
        return rel_sym(1, 1)
    if isinstance(c, Seq):
        return rel_compose(_rel(c.left), _rel(c.right))
    return rel_tensor(_rel(c.top), _rel(c.bottom))


def sem_span(c: Circuit) -> SpanZ:
    """
    Span semantics: generators as (id, A), co-generators as (A, id), and
    sequential composition by integer pullback.
    """
    typecheck(c)
    return _span(c)


def _span(c: Circuit) -> SpanZ:
    if isinstance(c, Gen):
        a = generator_matrix(c)
        return kappa2(a) if c.kind.is_co else kappa1(a)
    if isinstance(c, Id):
        return span_identity(c.n)
    if isinstance(c, Sym):
        return kappa1(_SWAP)
    if isinstance(c, Seq):
        return span_compose(_span(c.left), _span(c.right))
    return span_tensor(_span(c.top), _span(c.bottom))


def sem_cospan(c: Circuit) -> CospanZ:
    """
    Cospan semantics: generators as (A, id), co-generators as (id, A), and
    sequential composition by integer pushout.
    """
    typecheck(c)
    return _cospan(c)


def _cospan(c: Circuit) -> CospanZ:
    if isinstance(c, Gen):
        a = generator_matrix(c)
        return iota2(a) if c.kind.is_co else iota1(a)
    if isinstance(c, Id):
        return cospan_identity(c.n)
    if isinstance(c, Sym):
        return iota1(_SWAP)
    if isinstance(c, Seq):
        return cospan_compose(_cospan(c.left), _cospan(c.right))
    return cospan_tensor(_cospan(c.top), _cospan(c.bottom))


def sem_matrix(c: Circuit) -> MatZ:
    """
    Matrix semantics of a circuit built from add, zero, dup, del, amp,
    identities and symmetries only.

    Raises:
        NotAMatrixError: when ``c`` contains a co-generator
    """
    typecheck(c)
    return _matrix(c)


def _matrix(c: Circuit) -> MatZ:
    if isinstance(c, Gen):
        if c.kind.is_co:
            raise NotAMatrixError(f"{c.kind.value} has no matrix semantics")
        return generator_matrix(c)
    if isinstance(c, Id):
        return MatZ.identity(c.n)
    if isinstance(c, Sym):
        return _SWAP
    if isinstance(c, Seq):
        return _matrix(c.right) @ _matrix(c.left)
    return direct_sum(_matrix(c.top), _matrix(c.bottom))


def tra_span_to_cospan(s: SpanZ) -> CospanZ:
    """The cospan of transposed legs."""
    return CospanZ(s.left.T, s.right.T)


# ============================================================================
# Equality and normal forms
# ============================================================================
def explain_inequality(c1: Circuit, c2: Circuit) -> Optional[str]:
    """None when the circuits are equal, else a one-line reason."""
    i1, i2 = typecheck(c1), typecheck(c2)
    if i1 != i2:
        return f"interfaces differ: {i1} vs {i2}"
    r1, r2 = sem_rel(c1), sem_rel(c2)
    if r1 == r2:
        return None
    return (f"denotations differ: {[list(map(str, v)) for v in r1.space.vectors()]} "
            f"vs {[list(map(str, v)) for v in r2.space.vectors()]}")


def equal_ih(c1: Circuit, c2: Circuit) -> bool:
    """
    Decide equality in IH by comparing canonical denotations.

    Circuits with different interfaces, or that fail to typecheck, are unequal.
    """
    try:
        reason = explain_inequality(c1, c2)
    except CircuitTypeError as e:
        logger.debug(f"equal_ih: {e}")
        return False
    if reason is not None:
        logger.debug(f"equal_ih: {reason}")
    return reason is None


def normal_form(c: Circuit) -> Circuit:
    """
    Span form ``mirror(A) ; B`` of the canonical span (A, B) of c's relation.

    Two circuits are equal exactly when their normal forms are identical terms.
    """
    s = rel_to_span(sem_rel(c))
    logger.debug(f"normal_form: span {s.n}<-{s.z}->{s.m}")
    return Seq(mirror(matrix_to_circuit(s.left)), matrix_to_circuit(s.right))


def cospan_form(c: Circuit) -> Circuit:
    """Cospan form ``P ; mirror(Q)`` of the pushout cospan of c's relation."""
    cs = rel_to_cospan(sem_rel(c))
    logger.debug(f"cospan_form: cospan {cs.n}->{cs.z}<-{cs.m}")
    return Seq(matrix_to_circuit(cs.left), mirror(matrix_to_circuit(cs.right)))
