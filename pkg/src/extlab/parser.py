"""Recursive-descent parser for polynomial expressions and ring files.

Expression grammar (whitespace is insignificant)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := atom ('*' atom)*
    atom   := coeff | var ['^' uint]
    coeff  := int ['/' uint]

Ring file::

    # comment
    field Q            (or F2, F<7>, ...)
    vars X Y Z
    order degrevlex    (or lex)
    ideal
    X^2
    X*Y - Y*Z
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .field import FieldSpec
from .poly import DEGREVLEX, LEX, MonomialOrder, Polynomial, PolyRing, format_polynomial

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


class ParseError(ValueError):
    """Raised on malformed input; ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m:
                bad = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip())
                raise ParseError(f"unexpected character {stripped[bad]!r}", bad, text)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_uint(self) -> int:
        kind, val, pos = self.take()
        if kind != "num":
            raise ParseError("expected an unsigned integer", pos, self.text)
        return int(val)

    def expr(self) -> Polynomial:
        ring = self.ring
        total = ring.zero
        sign = 1
        kind, val, pos = self.peek()
        if kind is None:
            raise ParseError("empty expression", pos, self.text)
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = total + self.term().scale(sign)
        while True:
            kind, val, pos = self.peek()
            if kind is None:
                return total
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            else:
                raise ParseError(f"expected '+' or '-', got {val!r}", pos, self.text)

    def term(self) -> Polynomial:
        result = self.atom()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.atom()
            else:
                return result

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        ring = self.ring
        if kind == "num":
            coeff = Fraction(int(val))
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                den_pos = self.peek()[2]
                den = self.expect_uint()
                if den == 0:
                    raise ParseError("zero denominator", den_pos, self.text)
                coeff = Fraction(int(val), den)
            try:
                return ring.constant(coeff)
            except ValueError as exc:
                raise ParseError(str(exc), pos, self.text) from None
        if kind == "id":
            if val not in ring._index:
                raise ParseError(f"unknown variable {val!r}", pos, self.text)
            e = [0] * ring.nvars
            exp = 1
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "^":
                self.take()
                exp = self.expect_uint()
            e[ring.index(val)] = exp
            return ring.monomial(tuple(e))
        if kind is None:
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected {val!r}", pos, self.text)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` into an element of ``ring``; like terms are collected."""
    return _Parser(text, ring).expr()


@dataclass
class RingFile:
    """Contents of a ring-presentation file."""

    ring: PolyRing
    generators: List[Polynomial] = field(default_factory=list)
    name: Optional[str] = None


_ORDERS = {"degrevlex": DEGREVLEX, "lex": LEX}


def parse_ring_file(text: str) -> RingFile:
    fld: Optional[FieldSpec] = None
    names: Optional[Sequence[str]] = None
    order: MonomialOrder = DEGREVLEX
    name = None
    gens_text = []
    in_ideal = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_ideal:
            gens_text.append((lineno, line))
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            fld = FieldSpec.parse(rest)
        elif head == "vars":
            names = rest.split()
        elif head == "order":
            if rest not in _ORDERS:
                raise ValueError(f"line {lineno}: unknown order {rest!r}")
            order = _ORDERS[rest]
        elif head == "name":
            name = rest
        elif head == "ideal":
            in_ideal = True
        else:
            raise ValueError(f"line {lineno}: unexpected directive {head!r}")
    if names is None:
        raise ValueError("ring file has no 'vars' line")
    ring = PolyRing(names, fld if fld is not None else FieldSpec(0), order)
    gens = []
    for lineno, line in gens_text:
        try:
            gens.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", exc.pos, line) from None
    return RingFile(ring, gens, name)


def format_ring_file(ring: PolyRing, generators: Sequence[Polynomial],
                     name: Optional[str] = None, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    if name:
        lines.append(f"name {name}")
    lines.append(f"field {ring.field}")
    lines.append("vars " + " ".join(ring.variables))
    lines.append(f"order {ring.order.kind if ring.order.kind != 'elim' else 'degrevlex'}")
    lines.append("ideal")
    lines.extend(format_polynomial(g) for g in generators)
    return "\n".join(lines) + "\n"
