"""
Text and JSON formats for matrices and subspaces.

Matrix text format: a header line ``ROWS COLS`` followed by ROWS lines of COLS
space-separated entries, with no row lines when COLS is 0. Entries are
integers, or ``p/q`` rationals for rational matrices. Blank lines and ``#``
comments are ignored, so several labelled matrices can share one file.

Subspace text format: a header ``dim D, rank R`` followed by R basis rows.
"""
import json
import re
from fractions import Fraction
from typing import Any, Union

from ..core.exactnum import format_rat, parse_rat
from ..core.intmat import DenseMatrix, MatZ
from ..core.linrel import LinRel, MatQ, Subspace, subspace_from_generators
from ..utils.exceptions import DivisionByZeroError, MatrixFormatError
from ..utils.helpers import strip_comment

_SUBSPACE_HEADER = re.compile(r"^dim\s+(\d+)\s*,\s*rank\s+(\d+)$")


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with comments removed, paired with 1-based line numbers."""
    out = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = strip_comment(line).strip()
        if line:
            out.append((number, line))
    return out


def _parse_entry(token: str, rational: bool, line: int) -> Union[int, Fraction]:
    try:
        value = parse_rat(token)
    except (ValueError, DivisionByZeroError) as e:
        raise MatrixFormatError(f"bad entry {token!r}: {e}", line) from None
    if not rational and value.denominator != 1:
        raise MatrixFormatError(f"non-integer entry {token!r} in an integer matrix", line)
    return value if rational else int(value)


def _parse_header(line: str, number: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MatrixFormatError(f"expected 'ROWS COLS' header, got {line!r}", number)
    return int(parts[0]), int(parts[1])


def _take_matrix(lines: list[tuple[int, str]], start: int, rational: bool) -> tuple[DenseMatrix, int]:
    number, header = lines[start]
    rows, cols = _parse_header(header, number)
    if cols == 0:
        # a matrix with no columns is its header alone
        return (MatQ if rational else MatZ).zeros(rows, 0), start + 1
    entries = []
    for k in range(rows):
        if start + 1 + k >= len(lines):
            raise MatrixFormatError(f"expected {rows} rows, got {k}", number)
        row_number, row = lines[start + 1 + k]
        tokens = row.split()
        if len(tokens) != cols:
            raise MatrixFormatError(f"expected {cols} entries, got {len(tokens)}", row_number)
        entries.extend(_parse_entry(t, rational, row_number) for t in tokens)
    cls = MatQ if rational else MatZ
    return cls(rows, cols, entries), start + 1 + rows


def parse_matrices(text: str, rational: bool = False) -> list[DenseMatrix]:
    """Parse every matrix in ``text``, in order."""
    lines = _content_lines(text)
    out, pos = [], 0
    while pos < len(lines):
        mat, pos = _take_matrix(lines, pos, rational)
        out.append(mat)
    return out


def parse_matrix(text: str, rational: bool = False) -> DenseMatrix:
    """
    Parse exactly one matrix.

    Raises:
        MatrixFormatError: on a malformed header, row, or entry, or when the
            text holds no matrix or more than one
    """
    mats = parse_matrices(text, rational)
    if len(mats) != 1:
        raise MatrixFormatError(f"expected one matrix, found {len(mats)}")
    return mats[0]


def format_entry(x: Any) -> str:
    if isinstance(x, Fraction):
        return format_rat(x)
    return str(x)


def render_matrix(a: DenseMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    if a.cols == 0:
        return lines[0]
    lines.extend(" ".join(format_entry(x) for x in row) for row in a.to_rows())
    return "\n".join(lines)


def render_subspace(s: Subspace) -> str:
    lines = [f"dim {s.ambient}, rank {s.dim}"]
    lines.extend(" ".join(format_rat(x) for x in v) for v in s.vectors())
    return "\n".join(lines)


def parse_subspace(text: str) -> Subspace:
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("expected 'dim D, rank R' header")
    number, header = lines[0]
    m = _SUBSPACE_HEADER.match(header)
    if not m:
        raise MatrixFormatError(f"expected 'dim D, rank R' header, got {header!r}", number)
    ambient, rank = int(m.group(1)), int(m.group(2))
    if len(lines) - 1 != rank:
        raise MatrixFormatError(f"expected {rank} basis rows, got {len(lines) - 1}", number)
    vectors = []
    for row_number, row in lines[1:]:
        tokens = row.split()
        if len(tokens) != ambient:
            raise MatrixFormatError(f"expected {ambient} entries, got {len(tokens)}", row_number)
        vectors.append([_parse_entry(t, True, row_number) for t in tokens])
    return subspace_from_generators(ambient, vectors)


def render_relation(r: LinRel) -> str:
    """A ``# relation n->m`` comment line followed by the subspace."""
    return f"# relation {r.n}->{r.m}\n{render_subspace(r.space)}"


# ============================================================================
# JSON
# ============================================================================
def _entry_pair(x: Any) -> list[str]:
    q = Fraction(x)
    return [str(q.numerator), str(q.denominator)]


def matrix_to_dict(a: DenseMatrix) -> dict[str, Any]:
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [_entry_pair(x) for x in a.entries],
    }


def matrix_from_dict(data: dict[str, Any]) -> DenseMatrix:
    """Inverse of ``matrix_to_dict``; integral data gives a MatZ."""
    try:
        values = [Fraction(int(p), int(q)) for p, q in data["entries"]]
        rows, cols = int(data["rows"]), int(data["cols"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise MatrixFormatError(f"bad matrix JSON: {e}") from None
    if all(v.denominator == 1 for v in values):
        return MatZ(rows, cols, [int(v) for v in values])
    return MatQ(rows, cols, values)


def relation_to_dict(r: LinRel) -> dict[str, Any]:
    return {
        "n": r.n,
        "m": r.m,
        "basis": [[format_rat(x) for x in v] for v in r.space.vectors()],
    }


def relation_from_dict(data: dict[str, Any]) -> LinRel:
    try:
        n, m = int(data["n"]), int(data["m"])
        vectors = [[parse_rat(x) for x in v] for v in data["basis"]]
    except (KeyError, TypeError, ValueError, DivisionByZeroError) as e:
        raise MatrixFormatError(f"bad relation JSON: {e}") from None
    return LinRel(n, m, subspace_from_generators(n + m, vectors))


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2)
