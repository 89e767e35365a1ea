"""
Expression parser for polynomials in ``t`` over the split quaternions
(``mode="split"``) or the dual quaternions (``mode="euclid"``).

Grammar::

    expr   := sign? term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' uint)?
    atom   := rational | 't' | 'i' | 'j' | 'k' | 'e' | '(' expr ')'

Juxtaposition multiplies, in order.  ``e`` (or ``ε``) is the dual unit and
is only accepted in euclid mode.  Rationals are integers, ``p/q`` or
decimals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ModeError, ParseError

__all__ = ["Atom", "BinOp", "Neg", "Num", "Pow", "Token", "parse", "parse_ast", "tokenize"]

_TRANSLATE = str.maketrans({"−": "-", "–": "-", "ε": "e", "𝐢": "i", "𝐣": "j", "𝐤": "k", "·": "*"})
_NUMBER = re.compile(r"(\d+)/(\d+)|\d+\.\d*|\.\d+|\d+")
_SYMBOLS = "+-*^()"
_ATOMS = "tijke"


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "atom", an operator character, or "end"
    text: str
    pos: int
    value: Fraction | None = None


def tokenize(text: str) -> list[Token]:
    text = text.translate(_TRANSLATE)
    out = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUMBER.match(text, pos)
        if m:
            if m.group(2) is not None and int(m.group(2)) == 0:
                raise ParseError("zero denominator", pos)
            out.append(Token("num", m.group(0), pos, Fraction(m.group(0))))
            pos = m.end()
            continue
        if ch in _ATOMS:
            out.append(Token("atom", ch, pos))
        elif ch in _SYMBOLS:
            out.append(Token(ch, ch, pos))
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        pos += 1
    out.append(Token("end", "", len(text)))
    return out


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Atom:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    pos: int


Node = Union[Num, Atom, Neg, BinOp, Pow]


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {kind!r}, found {found!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        start = self.tok
        if start.kind in ("+", "-"):
            self.advance()
            node = self.term()
            if start.kind == "-":
                node = Neg(node, start.pos)
        else:
            node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance()
            node = BinOp(op.kind, node, self.term(), op.pos)
        return node

    def _starts_factor(self) -> bool:
        return self.tok.kind in ("num", "atom", "(")

    def term(self) -> Node:
        if not self._starts_factor():
            found = self.tok.text or "end of input"
            raise ParseError(f"expected a term, found {found!r}", self.tok.pos)
        node = self.factor()
        while True:
            if self.tok.kind == "*":
                op = self.advance()
                node = BinOp("*", node, self.factor(), op.pos)
            elif self._starts_factor():
                node = BinOp("*", node, self.factor(), self.tok.pos)
            else:
                return node

    def factor(self) -> Node:
        node = self.atom()
        if self.tok.kind == "^":
            caret = self.advance()
            exp = self.tok
            if exp.kind != "num" or not exp.text.isdigit():
                raise ParseError("exponent must be a nonnegative integer literal", exp.pos)
            self.advance()
            node = Pow(node, int(exp.text), caret.pos)
        return node

    def atom(self) -> Node:
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return Num(tok.value, tok.pos)
        if tok.kind == "atom":
            self.advance()
            return Atom(tok.text, tok.pos)
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = tok.text or "end of input"
        raise ParseError(f"expected a number, t, i, j, k, e or '(', found {found!r}", tok.pos)


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def _ring(mode: str):
    if mode == "split":
        from .algebra import SplitQuaternion
        from .poly import SplitPolynomial

        units = {name: SplitPolynomial.constant(SplitQuaternion.unit(u)) for u, name in enumerate("1ijk") if u}
        return SplitPolynomial, units
    if mode == "euclid":
        from .euclid import DualQuaternion, DualQuaternionPolynomial, Quaternion

        units = {name: DualQuaternionPolynomial.constant(DualQuaternion(Quaternion.unit(u)))
                 for u, name in enumerate("1ijk") if u}
        units["e"] = DualQuaternionPolynomial.constant(DualQuaternion(0, 1))
        return DualQuaternionPolynomial, units
    raise ValueError(f"mode must be 'split' or 'euclid', not {mode!r}")


def _evaluate(node: Node, poly, units, mode: str):
    if isinstance(node, Num):
        return poly.constant(node.value)
    if isinstance(node, Atom):
        if node.name == "t":
            return poly.t()
        if node.name == "e" and mode != "euclid":
            raise ModeError("the dual unit e is only allowed in euclid mode", node.pos)
        return units[node.name]
    if isinstance(node, Neg):
        return -_evaluate(node.operand, poly, units, mode)
    if isinstance(node, Pow):
        return _evaluate(node.base, poly, units, mode) ** node.exponent
    a = _evaluate(node.left, poly, units, mode)
    b = _evaluate(node.right, poly, units, mode)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b


def parse(text: str, mode: str = "split"):
    """Parse ``text`` into a :class:`SplitPolynomial` or a dual-quaternion polynomial."""
    poly, units = _ring(mode)
    return _evaluate(parse_ast(text), poly, units, mode)
