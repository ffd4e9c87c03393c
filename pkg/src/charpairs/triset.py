"""Triangular sets and the pseudo-division calculus."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence

from .errors import ConstantPolynomialError, StructuralError
from .groebner import GroebnerBasis, radical_member, saturate
from .polyring import Polynomial, VarOrdering, pseudo_divide


class TriangularSet:
    """Polynomials ``[T1, ..., Tr]`` with strictly increasing leading variables.

    The empty set is allowed; it shows up as the prefix below the smallest
    leading variable.
    """

    __slots__ = ("polys", "ring")

    def __init__(self, polys: Iterable[Polynomial], ring: Optional[VarOrdering] = None):
        polys = tuple(polys)
        if ring is None:
            if not polys:
                raise StructuralError("an empty triangular set needs an explicit ring")
            ring = polys[0].ring
        last = -1
        for p in polys:
            if p.ring != ring:
                raise StructuralError(f"ordering mismatch: {p.ring} vs {ring}")
            if p.is_constant():
                raise StructuralError(f"triangular sets hold nonconstant polynomials, got {p}")
            if p.level <= last:
                raise StructuralError("leading variables must strictly increase")
            last = p.level
        self.polys = polys
        self.ring = ring

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, TriangularSet):
            return self.ring == other.ring and self.polys == other.polys
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.polys))

    def __repr__(self) -> str:
        return f"{type(self).__name__}([" + ", ".join(map(str, self.polys)) + "])"

    def levels(self) -> list:
        return [p.level for p in self.polys]

    def initials(self) -> list:
        return [p.ini() for p in self.polys]

    def parameters(self) -> list:
        return parameters(self)

    def is_normal(self) -> bool:
        return is_normal(self)

    def is_r_reduced(self) -> bool:
        return is_r_reduced(self)

    def below(self, level: int) -> "TriangularSet":
        """Elements whose leading variable index is smaller than ``level``."""
        return TriangularSet([p for p in self.polys if p.level < level], self.ring)

    def upto(self, level: int) -> "TriangularSet":
        return TriangularSet([p for p in self.polys if p.level <= level], self.ring)

    def with_element(self, i: int, q: Polynomial) -> "TriangularSet":
        return TriangularSet(self.polys[:i] + (q,) + self.polys[i + 1:], self.ring)

    def element_at(self, level: int) -> Optional[Polynomial]:
        for p in self.polys:
            if p.level == level:
                return p
        return None


@dataclass(frozen=True)
class PseudoDivisionCertificate:
    """``multiplier * P == sum(quotients[i] * T[i]) + remainder``.

    ``exponents[i]`` is the power of ``ini(T[i])`` inside ``multiplier``.
    """

    multiplier: Polynomial
    quotients: tuple
    remainder: Polynomial
    exponents: tuple = field(default=())

    def check(self, p: Polynomial, T: Sequence[Polynomial]) -> bool:
        rhs = self.remainder
        for q, t in zip(self.quotients, T):
            rhs = rhs + q * t
        return self.multiplier * p == rhs


def _need_nonconstant(q: Polynomial) -> None:
    if q.is_constant():
        raise ConstantPolynomialError(f"pseudo-division by the constant {q}")


def prem_single(p: Polynomial, q: Polynomial) -> Polynomial:
    _need_nonconstant(q)
    return pseudo_divide(p, q, q.level)[2]


def pquo_single(p: Polynomial, q: Polynomial) -> Polynomial:
    _need_nonconstant(q)
    return pseudo_divide(p, q, q.level)[1]


def prem_chain(p: Polynomial, T) -> PseudoDivisionCertificate:
    """Iterated pseudo-remainder ``prem(...prem(p, T_r)..., T_1)`` with its certificate."""
    polys = list(T)
    ring = p.ring
    r = len(polys)
    mult = ring.one()
    quotients = [ring.zero()] * r
    exps = [0] * r
    rem = p
    for i in range(r - 1, -1, -1):
        t = polys[i]
        s, q, rem = pseudo_divide(rem, t, t.level)
        if s:
            factor = t.ini() ** s
            mult = factor * mult
            quotients = [factor * qq for qq in quotients]
        quotients[i] = q
        exps[i] = s
    return PseudoDivisionCertificate(mult, tuple(quotients), rem, tuple(exps))


def prem(p: Polynomial, T) -> Polynomial:
    """Shortcut for the remainder alone."""
    rem = p
    for t in reversed(list(T)):
        if not rem:
            break
        rem = pseudo_divide(rem, t, t.level)[2]
    return rem


# ---------------------------------------------------------------- resultants

def _det(rows: list) -> Polynomial:
    """Fraction-free (Bareiss) determinant of a square polynomial matrix."""
    from .polyring import exact_quotient

    n = len(rows)
    M = [list(r) for r in rows]
    ring = M[0][0].ring
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * pivot - M[i][k] * M[k][j]
                M[i][j] = exact_quotient(num, prev) if not prev.is_constant() else num / prev
            M[i][k] = ring.zero()
        prev = pivot
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def resultant(p: Polynomial, q: Polynomial, v) -> Polynomial:
    """Sylvester resultant of ``p`` and ``q`` with respect to ``v``."""
    ring = p.ring
    x = ring.index(v)
    m, n = p.degree(x), q.degree(x)
    if m <= 0 or n <= 0:
        if not p or not q:
            return ring.zero()
        # a factor of degree zero contributes its power
        if m <= 0 and n <= 0:
            return ring.one()
        return p ** n if m == 0 else q ** m
    pc = [p.coefficient(x, k) for k in range(m, -1, -1)]
    qc = [q.coefficient(x, k) for k in range(n, -1, -1)]
    size = m + n
    zero = ring.zero()
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return _det(rows)


def res_chain(p: Polynomial, T) -> Polynomial:
    """Iterated resultant; a step is the identity when ``lv(T_i)`` is absent."""
    r = p
    for t in reversed(list(T)):
        if not r:
            break
        if r.degree(t.level) <= 0:
            continue
        r = resultant(r, t, t.level)
    return r


# ---------------------------------------------------------------- predicates

def parameters(T: TriangularSet) -> list:
    lvs = set(T.levels())
    return [v for v in T.ring if v.index not in lvs]


def is_normal(T: TriangularSet) -> bool:
    lvs = set(T.levels())
    return all(not (p.ini().var_indices() & lvs) for p in T)


def first_abnormal_index(T: TriangularSet) -> Optional[int]:
    """Position of the first element whose prefix stops being normal."""
    seen: set = set()
    for i, p in enumerate(T):
        if p.ini().var_indices() & seen:
            return i
        seen.add(p.level)
    return None


def is_r_reduced_wrt(p: Polynomial, q: Polynomial) -> bool:
    x = q.level
    return p.degree(x) < q.degree(x)


def is_r_reduced(T: TriangularSet) -> bool:
    polys = T.polys
    return all(is_r_reduced_wrt(polys[i], polys[j])
               for i in range(len(polys)) for j in range(i))


def initial_product(T: TriangularSet) -> Polynomial:
    out = T.ring.one()
    for p in T:
        out = out * p.ini()
    return out


def sat_basis(T: TriangularSet) -> GroebnerBasis:
    """Reduced lex basis of ``<T> : (ini(T1)...ini(Tr))^oo``."""
    if not len(T):
        return GroebnerBasis((), T.ring)
    return saturate(list(T), initial_product(T))


# ------------------------------------------------------- projection falsifier

@dataclass
class ProjectionReport:
    """Outcome of a randomized search for a partial zero that does not extend.

    ``counterexample`` maps variable names to rational values; ``level`` is
    the number of triangular-set elements the partial point already solves.
    """

    counterexample: Optional[dict] = None
    level: Optional[int] = None
    samples: int = 0

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def __str__(self) -> str:
        if not self.found:
            return f"no counterexample found ({self.samples} samples)"
        pt = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
        return f"counterexample at level {self.level}: {pt}"


_SMALL = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
          Fraction(1, 2), Fraction(-1, 2), Fraction(3), Fraction(-3)]


def _divisors(n: int, limit: int = 10**6) -> Optional[list]:
    n = abs(n)
    if n > limit:
        return None
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
    return out


def rational_roots(p: Polynomial, x: int) -> list:
    """Rational roots of a polynomial that involves only variable ``x``."""
    if p.var_indices() - {x}:
        raise StructuralError(f"{p} is not univariate in {p.ring.names[x]}")
    coeffs = p.coefficients(x)
    low = min(coeffs)
    roots = {Fraction(0)} if low > 0 else set()
    from math import lcm

    den = lcm(*(c.constant_value().denominator for c in coeffs.values()))
    ints = {k - low: int(c.constant_value() * den) for k, c in coeffs.items()}
    top = max(ints)
    if top == 0:
        return sorted(roots)
    lead, const = ints[top], ints[0]
    num_d, den_d = _divisors(const), _divisors(lead)
    if num_d is None or den_d is None:
        return sorted(roots)
    for a in num_d:
        for b in den_d:
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if sum(c * cand ** k for k, c in ints.items()) == 0:
                    roots.add(cand)
    return sorted(roots)


def has_projection_property_witness(T: TriangularSet, sample_budget: int = 50,
                                    seed: int = 0) -> ProjectionReport:
    """Try to falsify the projection property of ``T``.

    Parameter points are sampled (small values first, then random
    rationals) away from the initials that involve parameters only.  Each
    partial zero is extended exactly: the remaining elements, specialised at
    the point, have a zero off their initials iff the product of those
    initials is not in the radical of their ideal.  Only rational partial
    zeros are explored at the higher levels.
    """
    ring = T.ring
    params = [v.index for v in parameters(T)]
    polys = list(T)
    rng = random.Random(seed)
    inits = [p.ini() for p in polys]

    def candidates():
        for combo in itertools.product(_SMALL, repeat=len(params)):
            yield combo
        while True:
            yield tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in params)

    report = ProjectionReport()
    for combo in itertools.islice(candidates(), sample_budget):
        report.samples += 1
        point = {ring.names[i]: v for i, v in zip(params, combo)}
        known = set(params)
        frontier = [point]
        for level in range(len(polys) + 1):
            next_frontier = []
            for pt in frontier:
                if any(ini.var_indices() <= known and not ini.evaluate(
                        {k: v for k, v in pt.items()}) for ini in inits):
                    continue
                rest = [p.subs(pt) for p in polys[level:]]
                J = ring.one()
                for ini in inits[level:]:
                    J = J * ini.subs(pt)
                if rest and radical_member(J, rest):
                    report.counterexample = dict(pt)
                    report.level = level
                    return report
                if level < len(polys):
                    target = polys[level]
                    x = target.level
                    spec = target.subs(pt)
                    if spec.var_indices() <= {x} and spec.degree(x) > 0 and len(next_frontier) < 16:
                        for root in rational_roots(spec, x):
                            next_frontier.append({**pt, ring.names[x]: root})
            if level < len(polys):
                known.add(polys[level].level)
            frontier = next_frontier
            if not frontier:
                break
    return report
