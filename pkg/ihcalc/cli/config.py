"""
Typed configuration for the ihcalc CLI.

``CliConfig`` replaces loose Namespace passing between argument parsing and
command dispatch.
"""

from argparse import Namespace
from dataclasses import dataclass, field
from typing import Any, Optional

from ..core.types import FracOp, OutputFormat, SemanticsKind
from ..utils.config import DEFAULT_OUTPUT_FORMAT, DEFAULT_SEED, TheoryConfig


@dataclass
class CliConfig:
    """One CLI invocation."""

    command: str
    inputs: list[str] = field(default_factory=list)
    output_format: OutputFormat = OutputFormat.TEXT
    seed: int = DEFAULT_SEED
    workers: int = 1
    semantics: SemanticsKind = SemanticsKind.REL
    dual: bool = False
    cospan: bool = False
    frac_op: Optional[FracOp] = None
    quiet: bool = False
    verbose: bool = False

    @property
    def json(self) -> bool:
        return self.output_format is OutputFormat.JSON

    @classmethod
    def from_namespace(cls, args: Namespace, prefs: Optional[dict[str, Any]] = None) -> "CliConfig":
        """Create CliConfig from argparse Namespace, falling back to preferences."""
        prefs = prefs or {}
        if getattr(args, 'json_output', False):
            fmt = OutputFormat.JSON
        else:
            fmt = OutputFormat.from_string(prefs.get('output_format', DEFAULT_OUTPUT_FORMAT))
        seed = getattr(args, 'seed', None)
        workers = getattr(args, 'workers', None)
        op = getattr(args, 'op', None)
        return cls(
            command=args.command,
            inputs=list(getattr(args, 'inputs', None) or []),
            output_format=fmt,
            seed=seed if seed is not None else prefs.get('seed', DEFAULT_SEED),
            workers=workers if workers is not None else prefs.get('workers', 1),
            semantics=SemanticsKind(getattr(args, 'semantics', SemanticsKind.REL.value)),
            dual=getattr(args, 'dual', False),
            cospan=getattr(args, 'cospan', False),
            frac_op=FracOp(op) if op else None,
            quiet=getattr(args, 'quiet', False),
            verbose=getattr(args, 'verbose', False),
        )

    def theory_config(self) -> TheoryConfig:
        return TheoryConfig(seed=self.seed, workers=self.workers)
