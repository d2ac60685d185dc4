"""Recursive-descent parser for generator expressions.

Grammar (whitespace insignificant)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' signed-int)?
    atom   := generator | scalar | '(' expr ')'

``t0`` is the curve around every puncture, ``s`` is q^(1/2), ``q = s^2``
and ``A`` is q + q^-1.  Products keep their order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import GenPolynomial
from .scalar import ALPHA, Q, S

__all__ = ["ParseError", "parse_expression"]


class ParseError(ValueError):
    """Raised with a machine-readable ``kind`` and the offending position."""

    def __init__(self, kind: str, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.kind = kind
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<gen>t\d*)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            bad = len(src) - len(src[pos:].lstrip())
            raise ParseError("syntax", f"unexpected character {src[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, n: int):
        self.toks = _tokenize(src)
        self.i = 0
        self.n = n

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == op:
            self.i += 1
            return True
        return False

    def expr(self) -> GenPolynomial:
        negate = self.accept("-")
        value = self.term()
        if negate:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> GenPolynomial:
        value = self.factor()
        while self.accept("*"):
            value = value * self.factor()
        return value

    def factor(self) -> GenPolynomial:
        base = self.atom()
        if not self.accept("^"):
            return base
        sign = -1 if self.accept("-") else 1
        tok = self.take()
        if tok.kind != "int":
            raise ParseError("exponent", "exponent must be an integer", tok.pos)
        k = sign * int(tok.text)
        if set(base.monomials()) <= {()}:
            c = base.coefficient(())
            if k < 0 and not c.is_unit():
                raise ParseError("exponent", "negative power of a non-unit scalar", tok.pos)
            return GenPolynomial.scalar(c**k)
        if k < 0:
            raise ParseError("exponent", "negative power of a generator expression", tok.pos)
        return base**k

    def atom(self) -> GenPolynomial:
        tok = self.take()
        if tok.kind == "int":
            return GenPolynomial.scalar(int(tok.text))
        if tok.kind == "gen":
            return GenPolynomial({(self.generator(tok),): 1})
        if tok.kind == "name":
            consts = {"q": Q, "s": S, "A": ALPHA}
            if tok.text in consts:
                return GenPolynomial.scalar(consts[tok.text])
            raise ParseError("syntax", f"unknown name {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            if not self.accept(")"):
                raise ParseError("syntax", "expected ')'", self.cur.pos)
            return value
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError("syntax", f"unexpected {what}", tok.pos)

    def generator(self, tok: _Tok) -> tuple[int, ...]:
        digits = tok.text[1:]
        if not digits:
            raise ParseError("empty-generator", "generator needs at least one puncture", tok.pos)
        if digits == "0":
            return tuple(range(1, self.n + 1))
        idx = [int(ch) for ch in digits]
        if any(v < 1 or v > self.n for v in idx):
            raise ParseError("out-of-range", f"puncture index out of range 1..{self.n} in {tok.text}", tok.pos)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ParseError("non-increasing", f"puncture indices must increase in {tok.text}", tok.pos)
        return tuple(idx)


def parse_expression(src: str, n: int = 4) -> GenPolynomial:
    p = _Parser(src, n)
    value = p.expr()
    if p.cur.kind != "end":
        raise ParseError("syntax", f"unexpected {p.cur.text!r}", p.cur.pos)
    return value
