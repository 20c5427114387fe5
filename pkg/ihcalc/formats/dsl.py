"""
Text syntax for circuits.

    circuit := term { ";" term }
    term    := factor { "*" factor }
    factor  := atom | "(" circuit ")"
    atom    := "id" [ "(" nat ")" ] | "sym"
             | "add" | "zero" | "dup" | "del"
             | "coadd" | "cozero" | "codup" | "codel"
             | "amp" "(" int ")" | "coamp" "(" int ")" | "neg"

``;`` binds looser than ``*`` and both associate to the left. Whitespace is
free and ``#`` starts a comment running to the end of the line.
"""
import re
from dataclasses import dataclass
from typing import Optional

from ..core.circuit import Circuit, Gen, Id, Seq, Sym, Tensor, amp, coamp, SYM
from ..core.types import GenKind
from ..utils.exceptions import CircuitParseError, UnknownAtomError

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>-?\d+)|(?P<punct>[();*])"
)

_PLAIN_ATOMS = {
    kind.value: Gen(kind) for kind in GenKind if not kind.has_scalar
}


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    """Split circuit text into tokens with 1-based line/column positions."""
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise CircuitParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def error(self, message: str, tok: Optional[Token] = None) -> CircuitParseError:
        tok = tok or self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return CircuitParseError(f"{message}, found {found}", tok.line, tok.column)

    def expect(self, text: str) -> Token:
        if self.peek.text != text or self.peek.kind != "punct":
            raise self.error(f"expected {text!r}")
        return self.advance()

    def expect_int(self, natural: bool = False) -> int:
        tok = self.peek
        if tok.kind != "int" or (natural and tok.text.startswith("-")):
            raise self.error("expected a natural number" if natural else "expected an integer")
        self.advance()
        return int(tok.text)

    def circuit(self) -> Circuit:
        out = self.term()
        while self.peek.kind == "punct" and self.peek.text == ";":
            self.advance()
            out = Seq(out, self.term())
        return out

    def term(self) -> Circuit:
        out = self.factor()
        while self.peek.kind == "punct" and self.peek.text == "*":
            self.advance()
            out = Tensor(out, self.factor())
        return out

    def factor(self) -> Circuit:
        tok = self.peek
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            inner = self.circuit()
            self.expect(")")
            return inner
        if tok.kind == "name":
            return self.atom()
        raise self.error("expected a circuit")

    def atom(self) -> Circuit:
        tok = self.advance()
        name = tok.text
        if name == "id":
            if self.peek.kind == "punct" and self.peek.text == "(":
                self.advance()
                n = self.expect_int(natural=True)
                self.expect(")")
                return Id(n)
            return Id(1)
        if name == "sym":
            return SYM
        if name == "neg":
            return amp(-1)
        if name in ("amp", "coamp"):
            self.expect("(")
            k = self.expect_int()
            self.expect(")")
            return amp(k) if name == "amp" else coamp(k)
        if name in _PLAIN_ATOMS:
            return _PLAIN_ATOMS[name]
        raise UnknownAtomError(f"unknown generator {name!r}", tok.line, tok.column)


def parse(text: str) -> Circuit:
    """
    Parse circuit text.

    Raises:
        CircuitParseError: with line and column of the offending token
        UnknownAtomError: for an unknown generator name
    """
    parser = _Parser(text)
    out = parser.circuit()
    if parser.peek.kind != "eof":
        raise parser.error("expected ';', '*' or end of input")
    return out


def render(c: Circuit) -> str:
    """Print a circuit so that ``parse(render(c)) == c``."""
    if isinstance(c, Gen):
        if c.kind.has_scalar:
            return f"{c.kind.value}({c.scalar})"
        return c.kind.value
    if isinstance(c, Id):
        return "id" if c.n == 1 else f"id({c.n})"
    if isinstance(c, Sym):
        return "sym"
    if isinstance(c, Seq):
        right = render(c.right)
        if isinstance(c.right, Seq):
            right = f"({right})"
        return f"{render(c.left)} ; {right}"
    if isinstance(c, Tensor):
        top, bottom = render(c.top), render(c.bottom)
        if isinstance(c.top, Seq):
            top = f"({top})"
        if isinstance(c.bottom, (Seq, Tensor)):
            bottom = f"({bottom})"
        return f"{top} * {bottom}"
    raise TypeError(f"not a circuit: {c!r}")
