"""Reader for the line-oriented polynomial system format.

::

    # comment
    vars: a < x < y < z
    a*y - x - 1
    -x*y*z + a*z

Operators are ``+ - * ^``, parentheses and unary minus.  ``/`` is accepted
only with a nonzero constant divisor so that printed rational coefficients
such as ``3/2*x`` read back unchanged.
"""

from __future__ import annotations

import re
from typing import Optional

from .errors import ParseError
from .polyring import Polynomial, VarOrdering

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")
_VARS = re.compile(r"^\s*vars\s*:(.*)$")


class _Parser:
    def __init__(self, text: str, ring: VarOrdering, line: int):
        self.ring = ring
        self.line = line
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            kind = "num" if m.group(1) else "name" if m.group(2) else "op"
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex) + 1))
            pos = m.end()
        self.end_col = len(text.rstrip()) + 1
        self.i = 0

    def error(self, msg: str, col: Optional[int] = None):
        if col is None:
            col = self.tokens[self.i][2] if self.i < len(self.tokens) else self.end_col
        raise ParseError(msg, self.line, col)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end_col)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op: str):
        kind, val, col = self.take()
        if kind != "op" or val != op:
            self.error(f"expected {op!r}", col)

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.error("empty expression")
        p = self.expr()
        if self.i < len(self.tokens):
            kind, val, col = self.peek()
            self.error(f"unexpected {val!r}", col)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op, col = self.take()[1:]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant():
                    self.error("division is only allowed by a constant", col)
                if not q:
                    self.error("division by zero", col)
                p = p / q.constant_value()
        return p

    def unary(self) -> Polynomial:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, col = self.take()
            if kind != "num":
                self.error("exponent must be a nonnegative integer literal", col)
            base = base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, col = self.take()
        if kind == "num":
            if self.peek()[0] == "name":
                self.error("multiplication must be explicit", self.peek()[2])
            return self.ring.constant(int(val))
        if kind == "name":
            if val not in self.ring:
                self.error(f"undeclared variable {val!r}", col)
            return self.ring.gen(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind is None:
            self.error("unexpected end of expression", col)
        self.error(f"unexpected {val!r}", col)


def parse_ordering(text: str) -> VarOrdering:
    names = [n.strip() for n in text.split("<")]
    for n in names:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9]*", n):
            raise ParseError(f"bad variable name {n!r}", 1, 1)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", 1, 1)
    return VarOrdering(names)


def parse_polynomial(text: str, ring: VarOrdering, line: int = 1) -> Polynomial:
    return _Parser(text, ring, line).parse()


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_system(text: str, ring: Optional[VarOrdering] = None):
    """Return ``(polys, ordering)``.

    ``ring`` overrides the declared ordering; it must name the same
    variables.
    """
    declared = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if declared is None:
            m = _VARS.match(line)
            if not m:
                raise ParseError("the first line must declare 'vars: v1 < v2 < ...'", lineno, 1)
            try:
                declared = parse_ordering(m.group(1))
            except ParseError as exc:
                decl = m.group(1)
                raise ParseError(exc.message, lineno, m.start(1) + len(decl) - len(decl.lstrip()) + 1) from None
            if ring is not None and sorted(ring.names) != sorted(declared.names):
                raise ParseError(f"ordering {ring} does not match the declared {declared}", lineno, 1)
            continue
        p = _Parser(line, ring or declared, lineno).parse()
        if not p:
            raise ParseError("zero polynomial", lineno, len(line) - len(line.lstrip()) + 1)
        polys.append(p)
    if declared is None:
        raise ParseError("missing 'vars:' declaration", 1, 1)
    if not polys:
        raise ParseError("no polynomials given", len(text.splitlines()) or 1, 1)
    return polys, ring or declared
