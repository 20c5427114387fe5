"""
Command execution logic for the ihcalc CLI.

Each ``cmd_*`` function takes a CliConfig, prints its result and returns the
process exit code. Library errors propagate to ``main.run`` which maps them
to exit codes.
"""

from typing import Callable

from .config import CliConfig
from .ui import emit, emit_json, print_report
from ..core.circuit import Circuit, frac, frac_add, frac_mul, pn, typecheck
from ..core.exactnum import format_rat, parse_rat
from ..core.intmat import SpanZ, hnf, kernel_basis, pullback, pushout
from ..core.linrel import classify_1_1, rel_dual
from ..core.semantics import (
    cospan_form,
    explain_inequality,
    normal_form,
    sem_cospan,
    sem_rel,
    sem_span,
)
from ..core.theory import axioms, check_all
from ..core.types import FracOp, SemanticsKind
from ..formats import dsl
from ..formats.matrix import (
    matrix_to_dict,
    parse_matrix,
    relation_to_dict,
    render_matrix,
    render_relation,
)
from ..utils.exceptions import FormatError, PreferenceError, SemanticDomainError
from ..utils.helpers import read_source, setup_logger
from ..utils.prefs import load_prefs, set_pref

logger = setup_logger(__name__)


def _read_matrix(value: str):
    return parse_matrix(read_source(value))


def _read_circuit(value: str) -> Circuit:
    return dsl.parse(read_source(value))


def _labelled(*sections: tuple[str, str]) -> str:
    return "\n".join(f"# {label}\n{body}" for label, body in sections)


def _legs_text(legs) -> str:
    if isinstance(legs, SpanZ):
        label = f"span {legs.n}->{legs.m}, middle {legs.z}"
    else:
        label = f"cospan {legs.n}->{legs.m}, middle {legs.z}"
    return f"# {label}\n" + _labelled(("left", render_matrix(legs.left)),
                                      ("right", render_matrix(legs.right)))


def _legs_dict(legs) -> dict:
    return {
        "kind": "span" if isinstance(legs, SpanZ) else "cospan",
        "n": legs.n,
        "m": legs.m,
        "left": matrix_to_dict(legs.left),
        "right": matrix_to_dict(legs.right),
    }


# ============================================================================
# Linear algebra commands
# ============================================================================
def cmd_hnf(config: CliConfig) -> int:
    a = _read_matrix(config.inputs[0])
    res = hnf(a)
    if config.json:
        emit_json({
            "h": matrix_to_dict(res.h),
            "u": matrix_to_dict(res.u),
            "r": res.r,
            "pivot_rows": list(res.pivot_rows),
        })
    else:
        emit(_labelled(("H", render_matrix(res.h)), ("U", render_matrix(res.u))))
        emit(f"# r = {res.r}")
        emit(f"# pivot_rows = {' '.join(map(str, res.pivot_rows))}".rstrip())
    return 0


def cmd_kernel(config: CliConfig) -> int:
    k = kernel_basis(_read_matrix(config.inputs[0]))
    if config.json:
        emit_json(matrix_to_dict(k))
    else:
        emit(render_matrix(k))
    return 0


def _cmd_limit(config: CliConfig, compute: Callable) -> int:
    f, g = (_read_matrix(v) for v in config.inputs[:2])
    p, q = compute(f, g)
    if config.json:
        emit_json({"p": matrix_to_dict(p), "q": matrix_to_dict(q)})
    else:
        emit(_labelled(("p", render_matrix(p)), ("q", render_matrix(q))))
    return 0


def cmd_pullback(config: CliConfig) -> int:
    return _cmd_limit(config, pullback)


def cmd_pushout(config: CliConfig) -> int:
    return _cmd_limit(config, pushout)


# ============================================================================
# Circuit commands
# ============================================================================
def cmd_sem(config: CliConfig) -> int:
    c = _read_circuit(config.inputs[0])
    if config.semantics is SemanticsKind.REL:
        r = sem_rel(c)
        if config.dual:
            r = rel_dual(r)
        if config.json:
            emit_json(relation_to_dict(r))
        else:
            emit(render_relation(r))
        return 0
    # The colour-swapped circuit denotes the dual relation.
    source = pn(c) if config.dual else c
    legs = sem_span(source) if config.semantics is SemanticsKind.SPAN else sem_cospan(source)
    if config.json:
        emit_json(_legs_dict(legs))
    else:
        emit(_legs_text(legs))
    return 0


def cmd_eq(config: CliConfig) -> int:
    c1, c2 = (_read_circuit(v) for v in config.inputs[:2])
    reason = explain_inequality(c1, c2)
    same_interface = typecheck(c1) == typecheck(c2)
    if config.json:
        data = {"equal": reason is None, "reason": reason}
        if same_interface:
            data["left"] = relation_to_dict(sem_rel(c1))
            data["right"] = relation_to_dict(sem_rel(c2))
        emit_json(data)
    elif reason is None:
        emit("equal")
    else:
        emit(f"# unequal: {reason}")
        if same_interface:
            emit(render_relation(sem_rel(c1)))
            emit(render_relation(sem_rel(c2)))
    return 0 if reason is None else 1


def cmd_normalize(config: CliConfig) -> int:
    c = _read_circuit(config.inputs[0])
    nf = cospan_form(c) if config.cospan else normal_form(c)
    text = dsl.render(nf)
    if config.json:
        emit_json({"circuit": text, "interface": str(typecheck(nf))})
    else:
        emit(text)
    return 0


def cmd_classify(config: CliConfig) -> int:
    c = _read_circuit(config.inputs[0])
    cls = classify_1_1(sem_rel(c))
    if config.json:
        value = cls.value
        emit_json({
            "tag": cls.tag.value,
            "k1": cls.k1,
            "k2": cls.k2,
            "value": format_rat(value) if value is not None else None,
        })
    else:
        emit(str(cls))
    return 0


def _parse_fraction(text: str):
    try:
        return parse_rat(text)
    except ValueError as e:
        raise FormatError(str(e)) from None


def cmd_frac(config: CliConfig) -> int:
    x, y = (_parse_fraction(v) for v in config.inputs[:2])
    cx, cy = frac(x.numerator, x.denominator), frac(y.numerator, y.denominator)
    c = frac_mul(cx, cy) if config.frac_op is FracOp.MUL else frac_add(cx, cy)
    cls = classify_1_1(sem_rel(c))
    value = cls.value
    if value is None:
        raise SemanticDomainError(f"{dsl.render(c)} denotes {cls}, not a number")
    logger.debug(f"frac {config.frac_op.value}: {dsl.render(c)} -> {cls}")
    if config.json:
        emit_json({"circuit": dsl.render(c), "value": format_rat(value)})
    else:
        emit(format_rat(value))
    return 0


def cmd_axioms(config: CliConfig) -> int:
    report = check_all(axioms(config.theory_config()), workers=config.workers)
    if config.json:
        emit_json(report.to_dict())
    else:
        print_report(report, quiet=config.quiet)
    return 0 if report.ok else 1


def cmd_fmt(config: CliConfig) -> int:
    c = _read_circuit(config.inputs[0])
    text = dsl.render(c)
    if config.json:
        emit_json({"circuit": text, "interface": str(typecheck(c))})
    else:
        emit(text)
    return 0


def cmd_prefs(config: CliConfig) -> int:
    if len(config.inputs) == 2:
        prefs = set_pref(*config.inputs)
    else:
        prefs = load_prefs()
        if config.inputs:
            key = config.inputs[0]
            if key not in prefs:
                raise PreferenceError(f"unknown preference {key!r}, expected one of: {', '.join(prefs)}")
            prefs = {key: prefs[key]}
    if config.json:
        emit_json(prefs)
    else:
        emit("\n".join(f"{k} = {v}" for k, v in prefs.items()))
    return 0


COMMANDS: dict[str, Callable[[CliConfig], int]] = {
    "hnf": cmd_hnf,
    "kernel": cmd_kernel,
    "pullback": cmd_pullback,
    "pushout": cmd_pushout,
    "sem": cmd_sem,
    "eq": cmd_eq,
    "normalize": cmd_normalize,
    "classify": cmd_classify,
    "frac": cmd_frac,
    "axioms": cmd_axioms,
    "fmt": cmd_fmt,
    "prefs": cmd_prefs,
}


def execute(config: CliConfig) -> int:
    """Dispatch one command and return its exit code."""
    return COMMANDS[config.command](config)
