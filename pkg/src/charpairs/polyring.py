"""Sparse multivariate polynomials over the rationals.

A :class:`VarOrdering` fixes the variables in ascending order
(``VarOrdering("a < x < y")`` makes ``a`` the smallest).  A
:class:`Polynomial` maps exponent vectors, aligned with that ordering, to
nonzero :class:`fractions.Fraction` coefficients.  Polynomials are
immutable; every binary operation requires both operands to carry equal
orderings.

Lex comparison looks at the greatest variable first, so the sort key of an
exponent vector is the reversed tuple.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import ConstantPolynomialError, StructuralError

Monomial = tuple  # tuple[int, ...] aligned with VarOrdering
Number = Union[int, Fraction]


def lex_key(m: Monomial) -> Monomial:
    return m[::-1]


@dataclass(frozen=True)
class Variable:
    name: str
    index: int

    def __lt__(self, other: "Variable") -> bool:
        return self.index < other.index

    def __str__(self) -> str:
        return self.name


class VarOrdering:
    """Ascending list of variable names.

    Accepts either an iterable of names or a string such as ``"x < y < z"``.
    """

    __slots__ = ("names", "_index", "_hash")

    def __init__(self, names: Union[str, Iterable[str]]):
        if isinstance(names, str):
            names = [s.strip() for s in names.split("<")]
        names = tuple(names)
        if not names:
            raise StructuralError("a variable ordering needs at least one variable")
        if any(not isinstance(n, str) or not n for n in names):
            raise StructuralError(f"invalid variable names {names!r}")
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate variable names in {names!r}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash(names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return (Variable(n, i) for i, n in enumerate(self.names))

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, VarOrdering) and self.names == other.names

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VarOrdering({' < '.join(self.names)!r})"

    def __str__(self) -> str:
        return " < ".join(self.names)

    def index(self, v) -> int:
        """Position of ``v`` (a name, :class:`Variable` or index)."""
        if isinstance(v, Variable):
            v = v.name
        if isinstance(v, int):
            if not 0 <= v < len(self.names):
                raise StructuralError(f"variable index {v} out of range")
            return v
        try:
            return self._index[v]
        except KeyError:
            raise StructuralError(f"unknown variable {v!r} in ordering {self}") from None

    def variable(self, v) -> Variable:
        i = self.index(v)
        return Variable(self.names[i], i)

    def gen(self, v) -> "Polynomial":
        i = self.index(v)
        m = [0] * len(self.names)
        m[i] = 1
        return Polynomial._make(self, {tuple(m): Fraction(1)})

    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(len(self.names)))

    def constant(self, c: Number) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial._make(self, {})
        return Polynomial._make(self, {(0,) * len(self.names): c})

    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def extend(self, *names: str) -> "VarOrdering":
        """New ordering with ``names`` appended as the greatest variables."""
        return VarOrdering(self.names + tuple(names))

    def fresh_name(self, stem: str = "w") -> str:
        # user-facing names must start with a letter, so "_" never collides
        k = 0
        while f"_{stem}{k}" in self._index:
            k += 1
        return f"_{stem}{k}"


def _level(m: Monomial) -> int:
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return -1


_add = operator.add


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "_terms", "_desc", "_level", "_hash")

    def __init__(self, ring: VarOrdering, terms=()):
        n = len(ring)
        d: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != n or any(e < 0 for e in m):
                raise StructuralError(f"exponent vector {m} does not fit {ring}")
            d[m] = d.get(m, 0) + Fraction(c)
        self.ring = ring
        self._terms = {m: c for m, c in d.items() if c}
        self._desc = None
        self._level = None
        self._hash = None

    @classmethod
    def _make(cls, ring: VarOrdering, terms: dict) -> "Polynomial":
        # trusted constructor: ``terms`` already has no zero coefficients
        obj = object.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._desc = None
        obj._level = None
        obj._hash = None
        return obj

    def __reduce__(self):
        return (_rebuild, (self.ring.names, self._terms))

    # ------------------------------------------------------------------ access

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self) -> tuple:
        """``(monomial, coefficient)`` pairs in descending lex order."""
        if self._desc is None:
            self._desc = tuple(sorted(self._terms.items(), key=lambda t: t[0][::-1], reverse=True))
        return self._desc

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return self.level < 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise StructuralError(f"{self} is not a constant")
        return next(iter(self._terms.values()), Fraction(0))

    @property
    def level(self) -> int:
        """Index of the leading variable, -1 for constants."""
        if self._level is None:
            self._level = max((_level(m) for m in self._terms), default=-1)
        return self._level

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise StructuralError("the zero polynomial has no leading term")
        return self.items()[0][0]

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            raise StructuralError("the zero polynomial has no leading term")
        return self.items()[0][1]

    def var_indices(self) -> set:
        out = set()
        for m in self._terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def variables(self) -> list:
        return [self.ring.variable(i) for i in sorted(self.var_indices())]

    def lv(self) -> Variable:
        if self.level < 0:
            raise ConstantPolynomialError(f"no leading variable: {self} is constant")
        return self.ring.variable(self.level)

    def degree(self, v) -> int:
        """Degree in ``v``; ``degree(0, v) == -1``."""
        if not self._terms:
            return -1
        i = self.ring.index(v)
        return max(m[i] for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def coefficient(self, v, k: int) -> "Polynomial":
        """Coefficient of ``v**k``, viewing ``self`` as univariate in ``v``."""
        i = self.ring.index(v)
        d = {}
        for m, c in self._terms.items():
            if m[i] == k:
                d[m[:i] + (0,) + m[i + 1:]] = c
        return Polynomial._make(self.ring, d)

    def coefficients(self, v) -> dict:
        """``{k: coefficient of v**k}`` for every power present."""
        i = self.ring.index(v)
        groups: dict = {}
        for m, c in self._terms.items():
            groups.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1:]] = c
        return {k: Polynomial._make(self.ring, d) for k, d in groups.items()}

    def ini(self) -> "Polynomial":
        """Leading coefficient in the leading variable."""
        x = self.level
        if x < 0:
            raise ConstantPolynomialError(f"no initial: {self} is constant")
        return self.coefficient(x, self.degree(x))

    def tail(self) -> "Polynomial":
        """``self - ini(self) * lv(self)**deg``."""
        x = self.level
        if x < 0:
            raise ConstantPolynomialError(f"no leading variable: {self} is constant")
        k = self.degree(x)
        return Polynomial._make(self.ring, {m: c for m, c in self._terms.items() if m[x] != k})

    # -------------------------------------------------------------- arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise StructuralError(f"ordering mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d = dict(a)
        for m, c in b.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v += c
                if v:
                    d[m] = v
                else:
                    del d[m]
        return Polynomial._make(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self.ring, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Number) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._make(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, mono: Monomial, c: Number) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._make(
            self.ring, {tuple(map(_add, m, mono)): v * c for m, v in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mono, c), = b.items()
            return self.mul_term(mono, c) if a is self._terms else other.mul_term(mono, c)
        d: dict = {}
        get = d.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(map(_add, m1, m2))
                d[m] = get(m, 0) + c1 * c2
        return Polynomial._make(self.ring, {m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # ----------------------------------------------------------- transformations

    def monic(self) -> "Polynomial":
        if not self._terms:
            raise StructuralError("cannot normalise the zero polynomial")
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def evaluate(self, point: Mapping) -> Fraction:
        """Exact value at ``point`` (keys: names, Variables or indices)."""
        values = {self.ring.index(k): Fraction(v) for k, v in point.items()}
        missing = self.var_indices() - values.keys()
        if missing:
            names = ", ".join(self.ring.names[i] for i in sorted(missing))
            raise StructuralError(f"no value assigned to {names}")
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    t *= values[i] ** e
            total += t
        return total

    def subs(self, point: Mapping) -> "Polynomial":
        """Substitute rational values for some variables (result stays in the same ring)."""
        values = {self.ring.index(k): Fraction(v) for k, v in point.items()}
        d: dict = {}
        for m, c in self._terms.items():
            t = c
            mm = list(m)
            for i, v in values.items():
                if mm[i]:
                    t *= v ** mm[i]
                    mm[i] = 0
            if t:
                key = tuple(mm)
                d[key] = d.get(key, 0) + t
        return Polynomial._make(self.ring, {m: c for m, c in d.items() if c})

    def derivative(self, v) -> "Polynomial":
        i = self.ring.index(v)
        d = {}
        for m, c in self._terms.items():
            if m[i]:
                d[m[:i] + (m[i] - 1,) + m[i + 1:]] = c * m[i]
        return Polynomial._make(self.ring, d)

    def to_ring(self, ring: VarOrdering) -> "Polynomial":
        """The same abstract polynomial expressed over ``ring`` (matched by name)."""
        if ring == self.ring:
            return self
        used = self.var_indices()
        perm = []
        for j, name in enumerate(ring.names):
            perm.append(self.ring._index.get(name))
        covered = {i for i in perm if i is not None}
        if not used <= covered:
            lost = ", ".join(self.ring.names[i] for i in sorted(used - covered))
            raise StructuralError(f"variables {lost} do not exist in {ring}")
        d = {}
        for m, c in self._terms.items():
            d[tuple(m[i] if i is not None else 0 for i in perm)] = c
        return Polynomial._make(ring, d)

    # ------------------------------------------------------------------ output

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r}, ring={str(self.ring)!r})"


def _rebuild(names, terms):
    return Polynomial._make(VarOrdering(names), terms)


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Descending lex terms, explicit ``*`` and ``^``; parses back to ``p``."""
    if not p._terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(m, p.ring.names)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------- free functions

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def lv(p: Polynomial) -> Variable:
    return p.lv()


def ini(p: Polynomial) -> Polynomial:
    return p.ini()


def degree(p: Polynomial, v) -> int:
    return p.degree(v)


def evaluate(p: Polynomial, point: Mapping) -> Fraction:
    return p.evaluate(point)


def primitive_monic(p: Polynomial) -> Polynomial:
    """``p`` divided by the coefficient of its lex leading term."""
    return p.monic()


def divide(f: Polynomial, g: Polynomial):
    """Multivariate division of ``f`` by a single ``g`` under lex: ``(q, r)``."""
    g = f._coerce(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    glm, glc = g.items()[0]
    gtail = [(m, c) for m, c in g._terms.items() if m != glm]
    p = dict(f._terms)
    q: dict = {}
    r: dict = {}
    while p:
        m = max(p, key=lex_key)
        c = p.pop(m)
        if all(a >= b for a, b in zip(m, glm)):
            shift = tuple(a - b for a, b in zip(m, glm))
            t = c / glc
            q[shift] = t
            for gm, gc in gtail:
                mm = tuple(map(_add, gm, shift))
                v = p.get(mm, 0) - t * gc
                if v:
                    p[mm] = v
                else:
                    p.pop(mm, None)
        else:
            r[m] = c
    return Polynomial._make(f.ring, q), Polynomial._make(f.ring, r)


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    q, r = divide(f, g)
    if r:
        raise StructuralError(f"{g} does not divide {f}")
    return q


def divides(g: Polynomial, f: Polynomial) -> bool:
    return not divide(f, g)[1]


def pseudo_divide(p: Polynomial, q: Polynomial, v):
    """Pseudo-division of ``p`` by ``q`` in the variable ``v``.

    Returns ``(s, Q, R)`` with ``lc**s * p == Q*q + R`` where ``lc`` is the
    leading coefficient of ``q`` in ``v``, ``deg(R, v) < deg(q, v)`` and
    ``s = max(deg(p, v) - deg(q, v) + 1, 0)``.
    """
    ring = p.ring
    x = ring.index(v)
    d = q.degree(x)
    if d <= 0:
        raise ConstantPolynomialError(f"{q} does not involve {ring.names[x]}")
    e = p.degree(x)
    if e < d:
        return 0, ring.zero(), p
    s = e - d + 1
    lc = q.coefficient(x, d)
    xm = [0] * len(ring)
    R, Q = p, ring.zero()
    steps = 0
    while R and R.degree(x) >= d:
        dr = R.degree(x)
        xm[x] = dr - d
        t = R.coefficient(x, dr).mul_term(tuple(xm), 1)
        R = lc * R - t * q
        Q = lc * Q + t
        steps += 1
    if steps < s:
        fix = lc ** (s - steps)
        R, Q = fix * R, fix * Q
    return s, Q, R
