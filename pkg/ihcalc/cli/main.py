"""
ihcalc CLI - Command Line Interface

Main entry point for the ihcalc command-line tool: integer matrix algebra,
circuit semantics and normal forms, and the equational-theory harness.
"""

import re
import sys
import argparse
import logging
from typing import Optional, Sequence

try:
    from rich_argparse import RichHelpFormatter
    HelpFormatter = RichHelpFormatter
except ImportError:
    HelpFormatter = argparse.HelpFormatter
from rich.logging import RichHandler

from .ui import err_console, print_error
from .config import CliConfig
from .commands import execute
from .. import __version__
from ..core.types import FracOp, SemanticsKind
from ..utils.config import OUTPUT_FORMATS
from ..utils.exceptions import (
    CircuitTypeError,
    DimensionMismatchError,
    DivisionByZeroError,
    FormatError,
    SemanticDomainError,
    TheoryError,
)
from ..utils.prefs import load_prefs

logger = logging.getLogger("ihcalc.cli")

EXIT_USAGE = 2
EXIT_TYPE = 3
EXIT_SEMANTIC = 4

# Operands such as -3/4 are values, not option flags.
_SIGNED_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Route all logging through Rich on stderr."""
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.ERROR
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, rich_tracebacks=True, show_path=False)],
        force=True,
    )
    for name in list(logging.Logger.manager.loggerDict):
        if name.startswith("ihcalc"):
            logging.getLogger(name).setLevel(level)


def create_argument_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser.

    Returns:
        Configured ArgumentParser instance
    """
    prefs = load_prefs()

    epilog = """
Examples:
  ihcalc hnf matrix.txt                        # Canonical Hermite normal form
  ihcalc kernel matrix.txt                     # Integer kernel basis
  ihcalc sem "dup ; (amp(2) * amp(3))"         # Denoted linear relation
  ihcalc eq "amp(2) ; coamp(2)" id             # Exit 0 when equal
  ihcalc normalize "amp(2) ; coamp(3)"         # Span-form normal circuit
  ihcalc frac mul 2/3 3/4                      # Prints 1/2
  ihcalc axioms --json                         # Run the theory harness
  ihcalc prefs seed 7                          # Store a default seed
"""

    if HelpFormatter == argparse.HelpFormatter:
        formatter = argparse.RawDescriptionHelpFormatter
    else:
        formatter = HelpFormatter

    parser = argparse.ArgumentParser(
        prog="ihcalc",
        description="Exact linear algebra and string-diagram calculus for interacting Hopf algebras over the integers.",
        formatter_class=formatter,
        epilog=epilog,
    )

    # Output control
    output_group = parser.add_argument_group("Output Control")
    output_group.add_argument(
        "--quiet", "-q",
        action="store_true",
        help="Suppress non-essential output",
    )
    output_group.add_argument(
        "--verbose",
        action="store_true",
        help="Enable verbose/debug output",
    )
    output_group.add_argument(
        "--json",
        dest="json_output",
        action="store_true",
        help=f"Output results as JSON (default format: {prefs.get('output_format', OUTPUT_FORMATS[0])})",
    )
    output_group.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"Seed for randomized scalar instances (default: {prefs.get('seed')})",
    )
    output_group.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"Threads for the axiom harness (default: {prefs.get('workers')})",
    )
    parser.add_argument(
        "--version", "-v",
        action="version",
        version=f"ihcalc {__version__}",
    )

    # Subcommand-level --json, so that `ihcalc axioms --json` works too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        dest="json_output",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Output results as JSON",
    )

    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name: str, help_text: str, *inputs: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[common], formatter_class=formatter)
        p.set_defaults(inputs=[])
        for metavar in inputs:
            p.add_argument(metavar, help=f"{metavar} (file path or inline text)")
        return p

    add("hnf", "Canonical Hermite normal form H = A U", "matrix")
    add("kernel", "Integer kernel basis", "matrix")
    add("pullback", "Pullback of the cospan A -> . <- B", "matrix_a", "matrix_b")
    add("pushout", "Pushout of the span A <- . -> B", "matrix_a", "matrix_b")

    sem = add("sem", "Denotation of a circuit", "circuit")
    sem.add_argument(
        "--as",
        dest="semantics",
        choices=[k.value for k in SemanticsKind],
        default=SemanticsKind.REL.value,
        help="Evaluator: linear relation, span or cospan (default: rel)",
    )
    sem.add_argument(
        "--dual",
        action="store_true",
        help="Denotation of the colour-swapped circuit",
    )

    add("eq", "Decide equality of two circuits (exit 0 equal, 1 unequal)", "circuit_a", "circuit_b")

    normalize = add("normalize", "Span-form normal circuit", "circuit")
    normalize.add_argument(
        "--cospan",
        action="store_true",
        help="Produce the cospan form instead",
    )

    add("classify", "Classify a 1->1 circuit among the subspaces of Q^2", "circuit")

    frac = add("frac", "Rational arithmetic with circuits")
    frac._negative_number_matcher = _SIGNED_RATIONAL
    frac.add_argument("op", choices=[op.value for op in FracOp], help="mul or add")
    frac.add_argument("x", help="First fraction, e.g. 2/3")
    frac.add_argument("y", help="Second fraction, e.g. -3/4")

    add("axioms", "Check every registered equation against the semantics")
    add("fmt", "Parse and pretty-print a circuit", "circuit")

    prefs_cmd = add("prefs", "Show or set the stored defaults")
    prefs_cmd.add_argument("key", nargs="?", help="output_format, seed or workers")
    prefs_cmd.add_argument("value", nargs="?", help="New value to store")

    return parser


def _collect_inputs(args: argparse.Namespace) -> None:
    names = ("matrix", "matrix_a", "matrix_b", "circuit", "circuit_a", "circuit_b", "x", "y", "key", "value")
    args.inputs = [getattr(args, n) for n in names if getattr(args, n, None) is not None]


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one CLI invocation and return its exit code.

    Exit codes: 0 success, 1 negative answer (unequal circuits, failed
    harness), 2 usage or input format errors, 3 circuit type errors,
    4 semantic-domain and dimension errors.
    """
    parser = create_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0

    configure_logging(args.verbose, args.quiet)
    _collect_inputs(args)
    config = CliConfig.from_namespace(args, load_prefs())
    logger.debug(f"running {config.command} on {config.inputs}")

    try:
        return execute(config)
    except (FormatError, DivisionByZeroError) as e:
        print_error(str(e))
        return EXIT_USAGE
    except CircuitTypeError as e:
        print_error(f"type error: {e}")
        return EXIT_TYPE
    except (SemanticDomainError, DimensionMismatchError, TheoryError) as e:
        print_error(str(e))
        return EXIT_SEMANTIC
    except OSError as e:
        print_error(str(e))
        return EXIT_USAGE


def main() -> None:
    """Run the command line version of ihcalc."""
    sys.exit(run())


if __name__ == "__main__":
    main()
