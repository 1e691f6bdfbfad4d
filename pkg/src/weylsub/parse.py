"""Surface syntax for operators, polynomials and symbols.

Grammar (juxtaposition multiplies; ``^`` binds tighter than ``*``, which binds
tighter than ``+``/``-``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*"? unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INT)?
    atom   := NUMBER | NAME | "(" expr ")"

NUMBER is an integer or ``a/b``.  Names are ``x`` and ``d`` for operators,
``x`` and ``xi`` for symbols, ``x`` alone for polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .poly import GradedPoly, Poly
from .weyl import WeylOp

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset[str]):
        super().__init__(f"{message} at byte {offset}; expected one of {sorted(expected)}")
        self.offset = offset
        self.expected = expected


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[_Tok]:
    toks, pos = [], 0
    while True:
        m = _TOKEN.match(text, pos)
        rest = text[pos:].strip()
        if not rest:
            break
        if m is None or m.end() == pos:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", _byte(text, start),
                             frozenset({"number", "name", "(", "+", "-", "*", "^", ")"}))
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), _byte(text, m.start(kind))))
        pos = m.end()
    toks.append(_Tok("end", "", _byte(text, len(text))))
    return toks


def _byte(text: str, idx: int) -> int:
    return len(text[:idx].encode("utf-8"))


_ATOM_START = frozenset({"number", "name", "("})


class _Parser:
    def __init__(self, text: str, names: dict[str, Callable[[], object]], one: Callable[[Fraction], object]):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = names
        self.one = one

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def _fail(self, expected: set[str]):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.offset, frozenset(expected))

    def _is(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def parse(self):
        value = self.expr()
        if self.tok.kind != "end":
            self._fail({"+", "-", "*", "end of input"} | _ATOM_START)
        return value

    def expr(self):
        value = self.term()
        while self._is("op", "+") or self._is("op", "-"):
            sign = self.tok.text
            self.i += 1
            rhs = self.term()
            value = value + rhs if sign == "+" else value - rhs
        return value

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("num", "name") or (t.kind == "op" and t.text == "(")

    def term(self):
        value = self.unary()
        while True:
            if self._is("op", "*"):
                self.i += 1
                value = value * self.unary()
            elif self._starts_atom():
                value = value * self.power()
            else:
                return value

    def unary(self):
        if self._is("op", "-"):
            self.i += 1
            return -self.unary()
        if self._is("op", "+"):
            self.i += 1
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self._is("op", "^"):
            self.i += 1
            if not self._is("num") or "/" in self.tok.text:
                self._fail({"integer exponent"})
            e = int(self.tok.text)
            self.i += 1
            return base**e
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return self.one(Fraction(t.text))
        if t.kind == "name":
            if t.text not in self.names:
                raise ParseError(f"unknown name {t.text!r}", t.offset,
                                 frozenset(self.names) | {"number", "("})
            self.i += 1
            return self.names[t.text]()
        if self._is("op", "("):
            self.i += 1
            value = self.expr()
            if not self._is("op", ")"):
                self._fail({")", "+", "-", "*"} | _ATOM_START)
            self.i += 1
            return value
        self._fail(set(self.names) | {"number", "(", "-"})


def parse_op(text: str) -> WeylOp:
    """Normal form of an operator written in x and d."""
    return _Parser(text, {"x": WeylOp.x, "d": WeylOp.d}, WeylOp.constant).parse()


def parse_graded(text: str) -> GradedPoly:
    """Element of Q[x, xi]."""
    names = {"x": lambda: GradedPoly.monomial(1, 0), "xi": lambda: GradedPoly.monomial(0, 1)}
    return _Parser(text, names, GradedPoly.constant).parse()


def parse_poly(text: str, var: str = "x") -> Poly:
    return _Parser(text, {var: Poly.x}, Poly.constant).parse()


def print_op(D: WeylOp) -> str:
    return D.to_str()


def print_graded(g: GradedPoly) -> str:
    return g.to_str()
