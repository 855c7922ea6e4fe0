"""Reader for user-supplied forms: one polynomial per line.

Grammar (whitespace between tokens is ignored)::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := ("+" | "-") factor | atom ("^" INT)?
    atom   := INT | "a" | "b" | "c" | "d" | "(" expr ")"

Coefficients are integers. Juxtaposition such as ``2a`` is rejected. Blank
lines and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

from .fields import QQ
from .poly import VARS, Polynomial


class PolyParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


class _Parser:
    def __init__(self, text: str, line: int, field):
        self.text = text
        self.line = line
        self.field = field
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise PolyParseError(msg, self.line, (self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Polynomial:
        if not self.peek():
            self.error("empty polynomial")
        p = self.expr()
        ch = self.peek()
        if ch:
            if ch in VARS or ch.isdigit() or ch == "(":
                self.error(f"missing operator before {ch!r} (juxtaposition is not allowed)")
            self.error(f"unexpected character {ch!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        ch = self.peek()
        if ch in ("+", "-"):
            self.take()
            f = self.factor()
            return -f if ch == "-" else f
        base = self.atom()
        if self.peek() == "^":
            self.take()
            if not self.peek().isdigit():
                self.error("exponent must be a nonnegative integer")
            base = base ** self.integer()
        return base

    def atom(self) -> Polynomial:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of line")
        if ch.isdigit():
            return Polynomial.const(self.integer(), self.field)
        if ch in VARS:
            self.take()
            return Polynomial.var(ch, self.field)
        if ch == "(":
            open_at = self.pos
            self.take()
            p = self.expr()
            if self.peek() != ")":
                self.error("unbalanced parenthesis", open_at)
            self.take()
            return p
        self.error(f"unexpected character {ch!r}")


def parse_polynomial(text: str, line: int = 1, field=QQ) -> Polynomial:
    return _Parser(text, line, field).parse()


def parse_polynomials(text: str, field=QQ) -> list[Polynomial]:
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        out.append(parse_polynomial(raw, n, field))
    return out
