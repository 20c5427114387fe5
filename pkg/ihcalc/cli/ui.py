"""
UI components for the ihcalc CLI.

Command results go to stdout as plain text that re-parses through the
matrix, subspace and circuit formats. Diagnostics, summaries and errors go
to the stderr console.
"""

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich.text import Text

from ..core.theory import TheoryReport
from ..formats.matrix import dumps

# Initialize Rich Consoles
console = Console()
err_console = Console(stderr=True)


def emit(text: str) -> None:
    """Print command output verbatim."""
    console.print(text, soft_wrap=True, markup=False, highlight=False)


def emit_json(data) -> None:
    emit(dumps(data))


def print_error(message: str) -> None:
    err_console.print(f"[bold red]error:[/bold red] {escape(message)}", soft_wrap=True)


def print_report(report: TheoryReport, quiet: bool = False) -> None:
    """
    Print one ``PASS|FAIL name n->m`` line per check, then a summary table.

    Args:
        report: Harness results
        quiet: Skip the summary table
    """
    for r in report.results:
        style = "green" if r.ok else "bold red"
        console.print(Text(r.line(), style=style), soft_wrap=True, highlight=False)

    if quiet:
        return

    axioms = [r for r in report.results if not r.control]
    controls = [r for r in report.results if r.control]
    table = Table(title="Theory Check", box=box.SIMPLE, show_header=True)
    table.add_column("Kind", style="cyan")
    table.add_column("Checked", justify="right")
    table.add_column("As expected", justify="right")
    table.add_row("equations", str(len(axioms)), str(sum(r.ok for r in axioms)))
    table.add_row("negative controls", str(len(controls)), str(sum(r.ok for r in controls)))
    err_console.print(table)
    if report.ok:
        err_console.print("[bold green]✓ all checks behaved as expected[/bold green]")
    else:
        err_console.print(f"[bold red]✗ {len(report.failures)} unexpected outcome(s)[/bold red]")
