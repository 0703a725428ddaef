"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | power
    power   := atom (('^' | '**') exponent)?
    exponent:= integer | '(' ['-'] integer ')' | '-' integer
    atom    := integer | variable | 'I' | '(' expr ')'

``I`` is the imaginary unit.  Division is only allowed by nonzero constants,
which is how rationals ``a/b`` enter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import ParseError
from .poly import Polynomial
from .scalars import IMAG

IMAGINARY_UNIT = "I"

_TOKEN = re.compile(r"\s*(?:(\d+)|([^\W\d]\w*)|(\*\*|[-+*/^()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'int' | 'name' | 'op' | 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    raw = text.encode("utf-8")

    # byte offsets are reported; map char offsets through the encoded prefix
    def byte_pos(i: int) -> int:
        return len(text[:i].encode("utf-8"))

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", byte_pos(bad))
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), byte_pos(m.start(1))))
        elif m.group(2) is not None:
            toks.append(_Tok("name", m.group(2), byte_pos(m.start(2))))
        else:
            toks.append(_Tok("op", m.group(3), byte_pos(m.start(3))))
        pos = m.end()
    toks.append(_Tok("end", "", len(raw)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: tuple):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, *ops: str) -> _Tok | None:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ops:
            self.i += 1
            return tok
        return None

    def expect(self, op: str) -> _Tok:
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            self.i += 1
            return tok
        raise ParseError(f"expected {op!r}, found {tok.text or 'end of input'!r}", tok.pos)

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected token {tok.text!r}", tok.pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Polynomial:
        p = self.unary()
        while True:
            if self.accept("*"):
                p = p * self.unary()
            elif tok := self.accept("/"):
                d = self.unary()
                if not d.is_constant() or d.is_zero():
                    raise ParseError("division only by a nonzero constant", tok.pos)
                p = p.scale(d.constant_value().inverse())
            else:
                return p

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.accept("^", "**"):
            k = self.exponent()
            return base ** k
        return base

    def exponent(self) -> int:
        tok = self.peek()
        if self.accept("("):
            neg = self.accept("-") is not None
            num = self.take()
            if num.kind != "int":
                raise ParseError("exponent must be an integer literal", num.pos)
            self.expect(")")
        else:
            neg = self.accept("-") is not None
            num = self.take()
            if num.kind != "int":
                raise ParseError("exponent must be an integer literal", num.pos)
        value = int(num.text)
        if neg and value != 0:
            raise ParseError("negative exponent", tok.pos)
        return value

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "int":
            return Polynomial.constant(self.ring, int(tok.text))
        if tok.kind == "name":
            if tok.text == IMAGINARY_UNIT:
                return Polynomial.constant(self.ring, IMAG)
            if tok.text not in self.ring:
                raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
            return Polynomial.variable(self.ring, tok.text)
        if tok.kind == "op" and tok.text == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {tok.text or 'end of input'!r}", tok.pos)


def parse_polynomial(text: str, ring: Sequence[str]) -> Polynomial:
    """Parse ``text`` into an expanded polynomial over ``ring``."""
    ring = tuple(ring)
    if IMAGINARY_UNIT in ring:
        raise ValueError(f"{IMAGINARY_UNIT!r} is reserved for the imaginary unit")
    if len(set(ring)) != len(ring):
        raise ValueError(f"duplicate variable names in {ring}")
    return _Parser(text, ring).parse()
