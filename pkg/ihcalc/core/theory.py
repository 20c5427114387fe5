"""
Equational theory registry and soundness harness.

Equations are written in the circuit language. Families indexed by scalars
are templates with ``{k}``, ``{k1}``/``{k2}`` or ``{l}`` placeholders and are
instantiated at a fixed scalar range plus seeded random draws. Every
registered equation must hold in the relational semantics; a few unsound
equations serve as negative controls for the harness itself.
"""
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, Optional

from .circuit import Circuit, typecheck
from .semantics import equal_ih
from .types import AxiomStatus, Interface
from ..formats import dsl
from ..utils.config import TheoryConfig
from ..utils.exceptions import CircuitTypeError, TheoryError, UnknownAxiomError
from ..utils.helpers import setup_logger

logger = setup_logger(__name__)

T = AxiomStatus.TRANSCRIBED
R = AxiomStatus.RECONSTRUCTED

# Snake-equation cups and caps of each colour.
_CUP_B, _CAP_B = "(codel ; dup)", "(codup ; del)"
_CUP_W, _CAP_W = "(zero ; coadd)", "(add ; cozero)"

# name, lhs, rhs, status
FIXED_EQUATIONS = [
    ["A1", "(zero * id) ; add", "id", T],
    ["A2", "sym ; add", "add", T],
    ["A3", "(add * id) ; add", "(id * add) ; add", T],
    ["A4", "dup ; (del * id)", "id", T],
    ["A5", "dup ; sym", "dup", T],
    ["A6", "dup ; (dup * id)", "dup ; (id * dup)", T],
    ["A7", "zero ; dup", "zero * zero", T],
    ["A8", "add ; dup", "(dup * dup) ; (id * sym * id) ; (add * add)", T],
    ["A9", "add ; del", "del * del", T],
    ["A10", "zero ; del", "id(0)", T],
    ["A11", "amp(1)", "id", T],
    ["A17", "amp(0)", "del ; zero", T],
    ["Hopf", "dup ; (neg * id) ; add", "del ; zero", T],
    ["I3.1", "(coadd * id) ; (id * add)", "add ; coadd", T],
    ["I3.2", "add ; coadd", "(id * coadd) ; (add * id)", T],
    ["I4.1", "(dup * id) ; (id * codup)", "codup ; dup", T],
    ["I4.2", "codup ; dup", "(id * dup) ; (codup * id)", T],
    ["I5", "zero ; coadd", "codel ; dup ; (id * neg)", R],
    ["I6", "add ; cozero", "(id * neg) ; codup ; del", R],
    ["I7", "coadd ; add", "id", T],
    ["I8", "dup ; codup", "id", T],
    ["antipode", "neg ; neg", "id", T],
    ["bone-white", "zero ; cozero", "id(0)", T],
    ["bone-black", "codel ; del", "id(0)", T],
    ["snake-black", f"(id * {_CUP_B}) ; ({_CAP_B} * id)", "id", R],
    ["snake-white", f"(id * {_CUP_W}) ; ({_CAP_W} * id)", "id", R],
    ["zero-scalar-cancel", "amp(0) ; coamp(0)", "del ; codel", R],
]

# Indexed by one scalar {k}.
UNARY_FAMILIES = [
    ["A13", "add ; amp({k})", "(amp({k}) * amp({k})) ; add", T],
    ["A14", "zero ; amp({k})", "zero", T],
    ["A15", "amp({k}) ; dup", "dup ; (amp({k}) * amp({k}))", T],
    ["A16", "amp({k}) ; del", "del", T],
]

# Indexed by two scalars {k1}, {k2}; {prod} and {sum} are derived.
BINARY_FAMILIES = [
    ["A12", "amp({k1}) ; amp({k2})", "amp({prod})", T],
    ["A18", "dup ; (amp({k1}) * amp({k2})) ; add", "amp({sum})", R],
]

# Indexed by one nonzero scalar {l}.
NONZERO_FAMILIES = [
    ["I1", "amp({l}) ; coamp({l})", "id", T],
    ["I2", "coamp({l}) ; amp({l})", "id", T],
]

NEGATIVE_CONTROLS = [
    ["control-scalar", "amp(2) ; coamp(3)", "id"],
    ["control-colour", "add", "codup"],
    ["control-sum", "dup ; add", "amp(3)"],
]


@dataclass(frozen=True)
class Axiom:
    """One instance of an equation between circuits."""
    name: str
    lhs: Circuit
    rhs: Circuit
    status: AxiomStatus = AxiomStatus.TRANSCRIBED

    def __post_init__(self):
        try:
            left, right = typecheck(self.lhs), typecheck(self.rhs)
        except CircuitTypeError as e:
            raise TheoryError(f"{self.name}: {e}") from e
        if left != right:
            raise TheoryError(f"{self.name}: sides have interfaces {left} and {right}")

    @property
    def interface(self) -> Interface:
        return typecheck(self.lhs)


def _make(name: str, lhs: str, rhs: str, status: AxiomStatus, **params: int) -> Axiom:
    if params:
        params = {**params, **_derived(params)}
        label = ",".join(f"{k}={v}" for k, v in params.items() if k not in ("prod", "sum"))
        name = f"{name}[{label}]"
    return Axiom(name, dsl.parse(lhs.format(**params)), dsl.parse(rhs.format(**params)), status)


def _derived(params: dict[str, int]) -> dict[str, int]:
    if "k1" in params and "k2" in params:
        return {"prod": params["k1"] * params["k2"], "sum": params["k1"] + params["k2"]}
    return {}


def _scalars(config: TheoryConfig) -> tuple[list[int], list[int]]:
    rng = random.Random(config.seed)
    draws = [rng.choice((-1, 1)) * rng.randint(4, config.random_bound)
             for _ in range(config.random_draws)]
    return list(config.scalars), draws


def axioms(config: Optional[TheoryConfig] = None) -> list[Axiom]:
    """Instantiate the whole registry."""
    config = config or TheoryConfig()
    fixed, draws = _scalars(config)
    ks = fixed + draws
    out = [_make(*row) for row in FIXED_EQUATIONS]
    for name, lhs, rhs, status in UNARY_FAMILIES:
        out.extend(_make(name, lhs, rhs, status, k=k) for k in ks)
    pairs = list(product(fixed, fixed)) + list(zip(draws, draws[1:] + draws[:1]))
    for name, lhs, rhs, status in BINARY_FAMILIES:
        out.extend(_make(name, lhs, rhs, status, k1=a, k2=b) for a, b in pairs)
    for name, lhs, rhs, status in NONZERO_FAMILIES:
        out.extend(_make(name, lhs, rhs, status, l=k) for k in ks if k != 0)
    logger.debug(f"registry: {len(out)} equation instances")
    return out


def negative_controls() -> list[Axiom]:
    return [_make(name, lhs, rhs, R) for name, lhs, rhs in NEGATIVE_CONTROLS]


def lookup(name: str, **params: int) -> Axiom:
    """
    Instantiate one registered equation by name.

    Scalar families need their parameters: ``k`` for A13-A16, ``k1``/``k2``
    for A12 and A18, and a nonzero ``l`` for I1 and I2.

    Raises:
        UnknownAxiomError: for an unregistered name
        TheoryError: for missing or invalid parameters
    """
    for row in FIXED_EQUATIONS:
        if row[0] == name:
            return _make(*row)
    families = [(UNARY_FAMILIES, {"k"}), (BINARY_FAMILIES, {"k1", "k2"}),
                (NONZERO_FAMILIES, {"l"})]
    for table, needed in families:
        for row in table:
            if row[0] != name:
                continue
            if set(params) != needed:
                raise TheoryError(f"{name} needs parameters {sorted(needed)}, got {sorted(params)}")
            if params.get("l") == 0:
                raise TheoryError(f"{name} needs a nonzero scalar")
            return _make(*row, **params)
    raise UnknownAxiomError(name)


def check_axiom(a: Axiom) -> bool:
    return equal_ih(a.lhs, a.rhs)


# ============================================================================
# Harness
# ============================================================================
@dataclass(frozen=True)
class CheckResult:
    name: str
    interface: Interface
    holds: bool
    control: bool = False
    status: AxiomStatus = AxiomStatus.TRANSCRIBED

    @property
    def ok(self) -> bool:
        """Axioms must hold and controls must fail."""
        return self.holds != self.control

    def line(self) -> str:
        return f"{'PASS' if self.holds else 'FAIL'} {self.name} {self.interface}"


@dataclass
class TheoryReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "results": [
                {
                    "name": r.name,
                    "interface": str(r.interface),
                    "holds": r.holds,
                    "control": r.control,
                    "status": r.status.value,
                }
                for r in self.results
            ],
        }


def check_all(
    registry: Optional[Iterable[Axiom]] = None,
    controls: Optional[Iterable[Axiom]] = None,
    workers: int = 1,
) -> TheoryReport:
    """
    Check every registered equation and every negative control.

    The report is ok when all equations hold and all controls fail. An empty
    registry passes vacuously with a warning.
    """
    registry = axioms() if registry is None else list(registry)
    controls = negative_controls() if controls is None else list(controls)
    if not registry:
        logger.warning("axiom registry is empty; nothing to check")
    jobs = [(a, False) for a in registry] + [(a, True) for a in controls]

    def run(job: tuple[Axiom, bool]) -> CheckResult:
        a, control = job
        return CheckResult(a.name, a.interface, check_axiom(a), control, a.status)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    report = TheoryReport(results)
    for r in report.failures:
        logger.debug(f"unexpected outcome: {r.line()}")
    return report
