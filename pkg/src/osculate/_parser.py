"""Tokenizer and recursive-descent parser for the variety text format.

Grammar (whitespace insignificant, statements separated by ``;``)::

    file      := stmt (';' stmt)* [';']
    stmt      := 'name' '=' IDENT | 'vars' '=' IDENT (',' IDENT)* | 'P'<n> '=' expr
    expr      := term (('+' | '-') term)*
    term      := unary (('*' | '/') unary)*      # '/' only by a nonzero constant
    unary     := ('+' | '-') unary | power
    power     := atom ['^' INT]
    atom      := INT | IDENT | '(' expr ')'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .exactmath import Poly

_SPACE_RE = re.compile(r"\s*")
_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)", re.S)
_COORD_RE = re.compile(r"P(\d+)$")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, IDENT, OP, EOF
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def locate(offset):
        line = max(i for i, s in enumerate(line_starts) if s <= offset)
        return line + 1, offset - line_starts[line] + 1

    pos = 0
    while True:
        pos = _SPACE_RE.match(text, pos).end()
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        start = m.start(m.lastindex)
        line, col = locate(start)
        if m.group(1) is not None:
            tokens.append(Token("INT", m.group(1), line, col))
        elif m.group(2) is not None:
            tokens.append(Token("IDENT", m.group(2), line, col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()=;,":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            tokens.append(Token("OP", ch, line, col))
        pos = m.end()
    line, col = locate(len(text))
    tokens.append(Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0
        self.varnames = None

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def accept(self, text):
        if self.tok.kind == "OP" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def ident(self):
        tok = self.tok
        if tok.kind != "IDENT":
            raise self.error(f"expected an identifier, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    # statements

    def parse_file(self):
        name = None
        coords = {}
        while self.tok.kind != "EOF":
            if self.accept(";"):
                continue
            key = self.ident()
            self.expect("=")
            if key.text == "name":
                if name is not None:
                    raise self.error("duplicate 'name'", key)
                name = self.ident().text
            elif key.text == "vars":
                if self.varnames is not None:
                    raise self.error("duplicate 'vars'", key)
                if coords:
                    raise self.error("'vars' must precede the coordinates", key)
                names = [self.ident()]
                while self.accept(","):
                    names.append(self.ident())
                seen = set()
                for t in names:
                    if t.text in seen or _COORD_RE.match(t.text) or t.text in ("name", "vars"):
                        raise self.error(f"invalid variable name {t.text!r}", t)
                    seen.add(t.text)
                self.varnames = [t.text for t in names]
            else:
                m = _COORD_RE.match(key.text)
                if not m:
                    raise self.error(f"unknown key {key.text!r}", key)
                if self.varnames is None:
                    raise self.error("'vars' must be declared before the coordinates", key)
                idx = int(m.group(1))
                if idx in coords:
                    raise self.error(f"duplicate coordinate {key.text}", key)
                coords[idx] = self.expr()
            if self.tok.kind != "EOF":
                self.expect(";")
        if self.varnames is None:
            raise self.error("missing 'vars' declaration")
        if not coords:
            raise self.error("no coordinates P0, P1, ... given")
        missing = [i for i in range(max(coords) + 1) if i not in coords]
        if missing:
            raise self.error(f"coordinate P{missing[0]} is missing")
        return name, tuple(self.varnames), tuple(coords[i] for i in range(len(coords)))

    # expressions

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.tok.kind == "OP" and self.tok.text == "/":
                slash = self.tok
                self.i += 1
                divisor = self.unary()
                if not divisor.is_constant or divisor.is_zero:
                    raise self.error("division is only allowed by a nonzero constant", slash)
                value = value.scale(1 / divisor.constant_value())
            else:
                return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "INT":
                raise self.error("exponent must be a non-negative integer literal")
            self.i += 1
            return base ** int(tok.text)
        return base

    def atom(self):
        tok = self.tok
        n = len(self.varnames)
        if tok.kind == "INT":
            self.i += 1
            return Poly.const(n, Fraction(int(tok.text)))
        if tok.kind == "IDENT":
            if tok.text not in self.varnames:
                raise self.error(f"unknown variable {tok.text!r}")
            self.i += 1
            return Poly.var(n, self.varnames.index(tok.text))
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        raise self.error(f"unexpected {tok.text or 'end of input'!r} in expression")


def parse_text(text):
    """Parse variety text into ``(name or None, varnames, coords)``."""
    return _Parser(text).parse_file()
