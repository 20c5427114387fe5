__version__ = "0.1.0"

from . import utils
from . import core
from . import formats

from .core.exactnum import (
    gcd,
    lcm,
    xgcd,
    rat_arith,
    clear_denominators,
    parse_rat,
    format_rat,
)

from .core.intmat import (
    MatZ,
    HnfResult,
    SpanZ,
    CospanZ,
    hnf,
    is_hnf,
    is_canonical_hnf,
    kernel_basis,
    pullback,
    pushout,
    det,
    is_unimodular,
    solve_z,
    rank,
    span_iso,
    cospan_iso,
    span_compose,
    cospan_compose,
)

from .core.linrel import (
    MatQ,
    Subspace,
    LinRel,
    rref,
    subspace_from_generators,
    kernel_q,
    solve_q,
    inverse_q,
    graph,
    phi,
    psi,
    rel_compose,
    rel_tensor,
    rel_dual,
    converse,
    rel_to_span,
    rel_to_cospan,
    classify_1_1,
)

from .core.circuit import (
    Circuit,
    Gen,
    Id,
    Sym,
    Seq,
    Tensor,
    typecheck,
    mirror,
    pn,
    matrix_to_circuit,
    circuit_to_matrix,
    desugar_scalars,
)

from .core.semantics import (
    sem_rel,
    sem_span,
    sem_cospan,
    sem_matrix,
    tra_span_to_cospan,
    equal_ih,
    normal_form,
    cospan_form,
)

from .core.theory import (
    Axiom,
    axioms,
    lookup,
    check_axiom,
    check_all,
)

from .formats.dsl import parse, render

from .utils.exceptions import (
    IHCalcError,
    DimensionMismatchError,
    FormatError,
    CircuitError,
    CircuitParseError,
    CircuitTypeError,
    SemanticDomainError,
    NotAMatrixError,
)
