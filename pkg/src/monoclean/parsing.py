"""Text syntax for monomials, ideals, and ordered monomial sequences.

Monomials look like ``x1^2*x2*x4`` (caret exponents, ``*`` separators,
exponent 1 omitted, unit monomial ``1``).  Ideals are comma-separated
monomials, with ``0`` for the zero ideal.  Coefficients, negative exponents,
and unknown variables are rejected with the offending token and position.
"""

from __future__ import annotations

import re

from .ideals import MonomialIdeal
from .ring import Monomial, RingContext


class ParseError(ValueError):
    """A syntax error; carries the 0-based position of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<op>[\^*,])|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", m.start(kind))
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingContext):
        self.tokens = _tokenize(text)
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.names)}
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.tokens))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_end(self):
        kind, value, at = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected token {value!r}", at)

    def monomial(self) -> Monomial:
        kind, value, at = self.peek()
        if kind == "int" and value == "1":
            self.take()
            return Monomial.unit(self.ring.nvars)
        if kind == "int":
            raise ParseError(f"coefficients are not supported: {value!r}", at)
        exps = [0] * self.ring.nvars
        while True:
            kind, value, at = self.take()
            if kind != "name":
                raise ParseError(f"expected a variable, got {value!r}", at)
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r}", at)
            var = self.index[value]
            exp = 1
            kind, value, _ = self.peek()
            if kind == "op" and value == "^":
                self.take()
                kind, value, at = self.take()
                if kind != "int":
                    raise ParseError(f"expected an exponent, got {value!r}", at)
                exp = int(value)
            exps[var] += exp
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                continue
            return Monomial(tuple(exps))


def parse_monomial(text: str, ring: RingContext) -> Monomial:
    parser = _Parser(text, ring)
    if not parser.tokens:
        raise ParseError("empty monomial", 0)
    m = parser.monomial()
    parser.expect_end()
    return m


def parse_sequence(text: str, ring: RingContext) -> tuple[Monomial, ...]:
    """An ordered, comma-separated monomial list; duplicates are kept."""
    parser = _Parser(text, ring)
    if not parser.tokens:
        raise ParseError("empty monomial sequence", 0)
    items = [parser.monomial()]
    while True:
        kind, value, at = parser.peek()
        if kind is None:
            return tuple(items)
        if kind == "op" and value == ",":
            parser.take()
            items.append(parser.monomial())
        else:
            raise ParseError(f"unexpected token {value!r}", at)


def parse_ideal(text: str, ring: RingContext) -> MonomialIdeal:
    stripped = text.strip()
    if stripped == "0":
        return MonomialIdeal.zero(ring.nvars)
    return MonomialIdeal(ring.nvars, parse_sequence(text, ring))


def format_monomial(m: Monomial, ring: RingContext | None = None) -> str:
    if m.is_unit():
        return "1"
    names = ring.names if ring is not None else tuple(f"x{i + 1}" for i in range(m.nvars))
    parts = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts)


def format_sequence(ms, ring: RingContext | None = None) -> str:
    return ", ".join(format_monomial(m, ring) for m in ms)


def format_ideal(ideal: MonomialIdeal, ring: RingContext | None = None) -> str:
    if ideal.is_zero():
        return "0"
    return format_sequence(ideal.gens, ring)
