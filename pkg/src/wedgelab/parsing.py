"""Text form of polynomials.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'
    VAR    := NAME | NAME '_(' INT ')' | NAME '_' TAG '(' INT ')' | NAME '_(' INT ',' INT ')'

Division is only allowed by a nonzero constant, which keeps rational
coefficients printable and re-parseable.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .polynomial import Polynomial, Variable

__all__ = ["ParseError", "UnknownVariableError", "parse_polynomial", "format_polynomial", "variable_table"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ParseError):
    pass


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<var>[A-Za-z][A-Za-z0-9]*(?:_[A-Za-z]*\(\s*\d+\s*(?:,\s*\d+\s*)?\))?)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

_SUPER = re.compile(r"([A-Za-z][A-Za-z0-9]*)_([A-Za-z]*)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)")


def _make_variable(text: str) -> Variable:
    m = _SUPER.fullmatch(text)
    if m is None:
        return Variable(text)
    base, tag, a, b = m.groups()
    if b is not None:
        if tag:
            raise ValueError("wedge variables take no copy tag")
        return Variable(base, "wedge", (int(a), int(b)))
    return Variable(base, "jet", (int(a),), tag)


def variable_table(variables: Iterable[Variable]) -> dict:
    """Map printed names to variables, for use as ``ring=`` in the parser."""
    return {str(v): v for v in variables}


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Mapping | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value:
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek()[1] in ("*", "/"):
            op, pos = self.take()[1:]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division by a non-constant or zero", pos)
                acc = acc / rhs
        return acc

    def unary(self) -> Polynomial:
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            operand = self.unary()
            return -operand if op == "-" else operand
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, text, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            return base ** int(text)
        return base

    def atom(self) -> Polynomial:
        kind, text, pos = self.take()
        if kind == "int":
            return Polynomial.constant(int(text))
        if kind == "var":
            if self.ring is not None:
                key = re.sub(r"\s+", "", text)
                if key not in self.ring:
                    raise UnknownVariableError(f"unknown variable {text!r}", pos)
                return Polynomial.var(self.ring[key])
            try:
                return Polynomial.var(_make_variable(text))
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {found}", pos)


def parse_polynomial(text: str, ring: Mapping | Iterable[Variable] | None = None) -> Polynomial:
    """Parse ``text`` into a canonical :class:`Polynomial`.

    ``ring`` restricts the admissible variables; it may be a name table
    (see :func:`variable_table`) or any iterable of variables. Without it,
    every well-formed name is accepted.
    """
    if ring is not None and not isinstance(ring, Mapping):
        ring = variable_table(ring)
    parser = _Parser(text, ring)
    if parser.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    result = parser.expr()
    kind, tok, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {tok!r}", pos)
    return result


def format_polynomial(p: Polynomial) -> str:
    return str(p)
