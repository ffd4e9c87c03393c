"""Reduced Gröbner bases by Buchberger's algorithm, plus ideal operations.

All computations are exact over Q.  Auxiliary variables for saturation,
radical membership and intersection are appended as the greatest
variables under names starting with ``_``, which the parser never accepts
for user variables.
"""

from __future__ import annotations

import heapq
import itertools
import math
import operator
from fractions import Fraction
from typing import Iterable, Optional

from .errors import StructuralError
from .ordering import LEX, TermOrder, block_lex, lex_sort_key
from .polyring import Polynomial, VarOrdering

_add = operator.add
_sub = operator.sub


# Internal form: {permuted monomial: coefficient}; plain tuple comparison of
# permuted monomials is the active term order.

def _to_internal(p: Polynomial, perm: tuple) -> dict:
    return {tuple(m[i] for i in perm): c for m, c in p._terms.items()}


def _from_internal(d: dict, ring: VarOrdering, perm: tuple) -> Polynomial:
    inv = [0] * len(perm)
    for pos, i in enumerate(perm):
        inv[i] = pos
    return Polynomial._make(ring, {tuple(m[j] for j in inv): c for m, c in d.items()})


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _entry(d: dict):
    lm = max(d)
    lc = d[lm]
    return lm, lc, [(m, c) for m, c in d.items() if m != lm]


def _reduce(p: dict, basis: list) -> dict:
    """Full reduction of ``p`` by ``basis`` entries ``(lm, lc, tail)``."""
    p = dict(p)
    r = {}
    while p:
        m = max(p)
        c = p.pop(m)
        for lm, lc, tail in basis:
            if _divides(lm, m):
                shift = tuple(map(_sub, m, lm))
                t = c if lc == 1 else c / lc
                for gm, gc in tail:
                    mm = tuple(map(_add, gm, shift))
                    v = p.get(mm)
                    if v is None:
                        p[mm] = -t * gc
                    else:
                        v -= t * gc
                        if v:
                            p[mm] = v
                        else:
                            del p[mm]
                break
        else:
            r[m] = c
    return r


def _spoly(a, b) -> dict:
    lma, lca, ta = a
    lmb, lcb, tb = b
    lcm = tuple(map(max, lma, lmb))
    sa = tuple(map(_sub, lcm, lma))
    sb = tuple(map(_sub, lcm, lmb))
    out: dict = {}
    for m, c in ta:
        mm = tuple(map(_add, m, sa))
        out[mm] = out.get(mm, 0) + c / lca
    for m, c in tb:
        mm = tuple(map(_add, m, sb))
        out[mm] = out.get(mm, 0) - c / lcb
    return {m: c for m, c in out.items() if c}


class GroebnerBasis:
    """A finite polynomial set with its term order.

    Instances produced by :func:`buchberger` are reduced Gröbner bases;
    constructing one by hand records a *claim* that :mod:`charpairs.verify`
    can check.  Elements are kept sorted ascending under lex.
    """

    __slots__ = ("polys", "ring", "order", "reduced", "_internal", "_perm")

    def __init__(self, polys: Iterable[Polynomial], ring: Optional[VarOrdering] = None,
                 order: TermOrder = LEX, reduced: bool = True):
        polys = [p for p in polys if p]
        if ring is None:
            if not polys:
                raise StructuralError("an empty basis needs an explicit ring")
            ring = polys[0].ring
        for p in polys:
            if p.ring != ring:
                raise StructuralError(f"ordering mismatch: {p.ring} vs {ring}")
        self.polys = tuple(sorted(set(polys), key=lex_sort_key))
        self.ring = ring
        self.order = order
        self.reduced = reduced
        self._internal = None
        self._perm = None

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i) -> Polynomial:
        return self.polys[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.polys == other.polys

    def __hash__(self) -> int:
        return hash((self.ring, self.polys))

    def __repr__(self) -> str:
        return "GroebnerBasis({" + ", ".join(map(str, self.polys)) + "})"

    def __reduce__(self):
        return (GroebnerBasis, (self.polys, self.ring, self.order, self.reduced))

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.polys

    def leading_monomials(self) -> list:
        return [_lead(p, self.order) for p in self.polys]

    def _engine(self):
        if self._internal is None:
            self._perm = self.order.permutation(len(self.ring))
            self._internal = [_entry(_to_internal(p, self._perm)) for p in self.polys]
        return self._perm, self._internal

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise StructuralError(f"ordering mismatch: {f.ring} vs {self.ring}")
        if not f:
            return f
        perm, basis = self._engine()
        return _from_internal(_reduce(_to_internal(f, perm), basis), self.ring, perm)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def to_ring(self, ring: VarOrdering) -> list:
        return [p.to_ring(ring) for p in self.polys]


def _lead(p: Polynomial, order: TermOrder):
    return max(p._terms, key=order.key)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def ideal_member(f: Polynomial, G: GroebnerBasis) -> bool:
    return G.contains(f)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = LEX) -> Polynomial:
    if not f or not g:
        raise StructuralError("S-polynomial of the zero polynomial")
    if f.ring != g.ring:
        raise StructuralError(f"ordering mismatch: {f.ring} vs {g.ring}")
    perm = order.permutation(len(f.ring))
    return _from_internal(_spoly(_entry(_to_internal(f, perm)), _entry(_to_internal(g, perm))),
                          f.ring, perm)


def _as_list(F) -> list:
    if isinstance(F, GroebnerBasis):
        return list(F.polys)
    return [f for f in F if f]


def _ring_of(F: list, ring: Optional[VarOrdering]) -> VarOrdering:
    if ring is None:
        if not F:
            raise StructuralError("cannot infer the ring of an empty generating set")
        ring = F[0].ring
    for f in F:
        if f.ring != ring:
            raise StructuralError(f"ordering mismatch: {f.ring} vs {ring}")
    return ring


def _integral(d: dict) -> dict:
    """Primitive integer multiple of ``d`` with positive leading coefficient."""
    den = 1
    for c in d.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in d.items()}
    return _primitive(ints)


def _primitive(d: dict) -> dict:
    g = 0
    for c in d.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if d[max(d)] < 0:
        g = -g
    if g == 1:
        return d
    return {m: c // g for m, c in d.items()}


def _reduce_int(p: dict, basis: list) -> dict:
    """Fraction-free full reduction of an integer polynomial.

    The result is a nonzero integer multiple of the true remainder, made
    primitive.  Content is stripped every few steps to limit growth.
    """
    p = dict(p)
    r: dict = {}
    steps = 0
    while p:
        m = max(p)
        c = p.pop(m)
        for lm, lc, tail in basis:
            if _divides(lm, m):
                g = math.gcd(c, lc)
                mult, t = lc // g, c // g
                if mult != 1:
                    for k in p:
                        p[k] *= mult
                    for k in r:
                        r[k] *= mult
                shift = tuple(map(_sub, m, lm))
                for gm, gc in tail:
                    mm = tuple(map(_add, gm, shift))
                    v = p.get(mm, 0) - t * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                steps += 1
                if steps % 8 == 0 and (p or r):
                    cont = 0
                    for v in itertools.chain(p.values(), r.values()):
                        cont = math.gcd(cont, v)
                        if cont == 1:
                            break
                    if cont > 1:
                        p = {k: v // cont for k, v in p.items()}
                        r = {k: v // cont for k, v in r.items()}
                break
        else:
            r[m] = c
    return _primitive(r) if r else r


def _spoly_int(a, b) -> dict:
    lma, lca, ta = a
    lmb, lcb, tb = b
    lcm = tuple(map(max, lma, lmb))
    sa = tuple(map(_sub, lcm, lma))
    sb = tuple(map(_sub, lcm, lmb))
    g = math.gcd(lca, lcb)
    fa, fb = lcb // g, lca // g
    out: dict = {}
    for m, c in ta:
        mm = tuple(map(_add, m, sa))
        out[mm] = out.get(mm, 0) + fa * c
    for m, c in tb:
        mm = tuple(map(_add, m, sb))
        out[mm] = out.get(mm, 0) - fb * c
    return {m: c for m, c in out.items() if c}


def buchberger(F, order: TermOrder = LEX, ring: Optional[VarOrdering] = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``F``.

    Pairs are selected by smallest lcm; Buchberger's coprime and chain
    criteria discard pairs.  ``{1}`` is returned exactly for the unit ideal,
    the empty basis for the zero ideal.  Intermediate elements are kept as
    primitive integer polynomials; the result is made monic at the end.
    """
    gens = _as_list(F)
    if isinstance(F, GroebnerBasis) and ring is None:
        ring = F.ring
    ring = _ring_of(gens, ring)
    if not gens:
        return GroebnerBasis((), ring, order)
    one = GroebnerBasis((ring.one(),), ring, order)
    if any(g.is_constant() for g in gens):
        return one
    perm = order.permutation(len(ring))
    unit = (0,) * len(ring)

    G: list = []  # entries (lm, lc, tail), integer coefficients
    pending: set = set()
    heap: list = []

    def add(d):
        entry = _entry(d)
        j = len(G)
        G.append(entry)
        lmj = entry[0]
        for i in range(j):
            lcm = tuple(map(max, G[i][0], lmj))
            pending.add((i, j))
            heapq.heappush(heap, (lcm, i, j))

    for d in sorted((_integral(_to_internal(g, perm)) for g in gens), key=max):
        r = _reduce_int(d, G)
        if r:
            if max(r) == unit:
                return one
            add(r)

    while heap:
        lcm, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lmi, lmj = G[i][0], G[j][0]
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        if _chain(i, j, lcm, G, pending):
            continue
        r = _reduce_int(_spoly_int(G[i], G[j]), G)
        if r:
            if max(r) == unit:
                return one
            add(r)

    # minimalise, then interreduce
    lms = [e[0] for e in G]
    keep = [k for k in range(len(G))
            if not any(h != k and _divides(lms[h], lms[k]) for h in range(len(G)))]
    basis = [G[k] for k in keep]
    result = []
    for k in range(len(basis)):
        others = result + basis[k + 1:]
        lm, lc, tail = basis[k]
        # the head is not divisible by any other leading term, so it survives
        result.append(_entry(_reduce_int({lm: lc, **dict(tail)}, others)))
    polys = []
    for lm, lc, tail in result:
        inv = Fraction(1, lc)
        d = {lm: Fraction(1)}
        d.update((m, c * inv) for m, c in tail)
        polys.append(_from_internal(d, ring, perm))
    return GroebnerBasis(polys, ring, order)


def _chain(i: int, j: int, lcm: tuple, G: list, pending: set) -> bool:
    for k in range(len(G)):
        if k == i or k == j:
            continue
        if _divides(G[k][0], lcm):
            ik = (i, k) if i < k else (k, i)
            jk = (j, k) if j < k else (k, j)
            if ik not in pending and jk not in pending:
                return True
    return False


# ------------------------------------------------------------ ideal operations

def eliminate(F, drop: Iterable, ring: Optional[VarOrdering] = None) -> GroebnerBasis:
    """Reduced basis of ``<F>`` intersected with the ring of the retained variables.

    ``drop`` must be the greatest variables of the ring.  The result lives in
    the ordering without them; if every variable is dropped it stays in the
    original ring and is either ``{1}`` or empty.
    """
    gens = _as_list(F)
    if isinstance(F, GroebnerBasis) and ring is None:
        ring = F.ring
    ring = _ring_of(gens, ring)
    n = len(ring)
    idx = sorted({ring.index(v) for v in drop})
    k = len(idx)
    if idx != list(range(n - k, n)):
        raise StructuralError("eliminated variables must form the top block of the ordering")
    if k == 0:
        return buchberger(gens, LEX, ring)
    order = LEX if k == n else block_lex(n - k)
    G = buchberger(gens, order, ring)
    if k == n:
        kept = [g for g in G if g.is_constant()]
        return GroebnerBasis(kept, ring, LEX)
    sub = VarOrdering(ring.names[: n - k])
    kept = [g.to_ring(sub) for g in G if g.level < n - k]
    return GroebnerBasis(kept, sub, LEX)


def saturate(F, h: Polynomial) -> GroebnerBasis:
    """Reduced lex basis of ``<F> : h^oo`` via the Rabinowitsch variable."""
    if not h:
        raise StructuralError("cannot saturate by the zero polynomial")
    gens = _as_list(F)
    ring = _ring_of(gens, h.ring)
    if h.is_constant():
        return buchberger(gens, LEX, ring)
    w = ring.fresh_name("w")
    ext = ring.extend(w)
    wv = ext.gen(w)
    aux = [g.to_ring(ext) for g in gens] + [1 - wv * h.to_ring(ext)]
    return eliminate(aux, [w], ext)


def radical_member(f: Polynomial, F) -> bool:
    """Whether ``f`` vanishes on the zero set of ``F`` (over the algebraic closure)."""
    gens = _as_list(F)
    ring = _ring_of(gens, f.ring)
    if not f:
        return True
    if isinstance(F, GroebnerBasis) and F.order == LEX and F.contains(f):
        return True
    w = ring.fresh_name("w")
    ext = ring.extend(w)
    wv = ext.gen(w)
    aux = [g.to_ring(ext) for g in gens] + [1 - wv * f.to_ring(ext)]
    return buchberger(aux, LEX, ext).is_unit()


def ideal_intersect(F, G, ring: Optional[VarOrdering] = None) -> GroebnerBasis:
    """Reduced lex basis of ``<F> ∩ <G>`` by eliminating ``t`` from ``tF + (1-t)G``."""
    a, b = _as_list(F), _as_list(G)
    if ring is None:
        for src in (F, G):
            if isinstance(src, GroebnerBasis):
                ring = src.ring
                break
    ring = _ring_of(a + b, ring)
    if not a or not b:
        return GroebnerBasis((), ring, LEX)
    t = ring.fresh_name("t")
    ext = ring.extend(t)
    tv = ext.gen(t)
    aux = [tv * f.to_ring(ext) for f in a] + [(1 - tv) * g.to_ring(ext) for g in b]
    return eliminate(aux, [t], ext)


def ideal_equal(F, G) -> bool:
    a, b = buchberger(F), buchberger(G)
    return a == b
