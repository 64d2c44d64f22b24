"""Polynomial expression parser.

Grammar (explicit ``*`` required, no juxtaposition)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | IDENT | '(' expr ')'

Identifiers match ``[a-z][a-z0-9]*``.  Division is only allowed by a nonzero
constant, which covers rational literals such as ``1/48``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][a-z0-9]*)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class PolynomialSource:
    text: str
    variables: tuple[str, ...] | None = None
    parameters: Mapping[str, Fraction] = field(default_factory=dict)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def natural_key(name: str):
    m = re.fullmatch(r"([a-z]+?)(\d*)", name)
    if m is None:
        return (name, -1)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def identifiers(text: str) -> list[str]:
    return sorted({v for kind, v, _ in _tokenize(text) if kind == "ident"}, key=natural_key)


class _Parser:
    def __init__(self, text, variables, params):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables
        self.params = params

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value or kind != "op":
            raise ParseError(f"expected {value!r}", pos)

    def parse(self) -> Polynomial:
        kind, _, pos = self.peek()
        if kind == "end":
            raise ParseError("empty expression", pos)
        p = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant():
                    raise ParseError("division by a non-constant", pos)
                c = q.constant_term()
                if c == 0:
                    raise ParseError("zero denominator", pos)
                p = p / c
        return p

    def unary(self) -> Polynomial:
        kind, v, _ = self.peek()
        if kind == "op" and v in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if v == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, v, _ = self.peek()
        if kind == "op" and v == "^":
            self.take()
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            return base ** int(v)
        return base

    def atom(self) -> Polynomial:
        kind, v, pos = self.take()
        if kind == "int":
            return Polynomial.constant(self.variables, int(v))
        if kind == "ident":
            if v in self.params:
                return Polynomial.constant(self.variables, self.params[v])
            if v in self.variables:
                return Polynomial.variable(self.variables, v)
            raise ParseError(f"unknown identifier {v!r}", pos)
        if kind == "op" and v == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {v!r}", pos)


def parse_polynomial(
    src: str | PolynomialSource,
    variables: Sequence[str] | None = None,
    parameters: Mapping[str, Fraction | int] | None = None,
) -> Polynomial:
    """Parse an expression into an exact polynomial.

    Parameters are substituted before construction.  When ``variables`` is
    omitted, every non-parameter identifier becomes a variable, in natural
    order (z1 < z2 < z10).
    """
    if isinstance(src, PolynomialSource):
        text, variables, parameters = src.text, src.variables, src.parameters
    else:
        text = src
    params = {k: Fraction(v) for k, v in (parameters or {}).items()}
    if variables is None:
        variables = [v for v in identifiers(text) if v not in params]
    variables = tuple(variables)
    clash = set(variables) & set(params)
    if clash:
        raise ValueError(f"names used as both variable and parameter: {sorted(clash)}")
    return _Parser(text, variables, params).parse()


def parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
    return value
