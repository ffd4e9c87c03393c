"""Multivariate gcd over Q by recursive primitive remainder sequences."""

from __future__ import annotations

from functools import reduce

from .polyring import Polynomial, exact_quotient, pseudo_divide


def _monic_or_zero(p: Polynomial) -> Polynomial:
    return p.monic() if p else p


def content(p: Polynomial, x: int) -> Polynomial:
    """Gcd of the coefficients of ``p`` viewed as univariate in variable ``x``."""
    coeffs = sorted(p.coefficients(x).values(), key=len)
    return reduce(gcd, coeffs, p.ring.zero())


def primitive_part(p: Polynomial, x: int) -> Polynomial:
    if not p:
        return p
    c = content(p, x)
    return exact_quotient(p, c).monic()


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    if not f:
        return _monic_or_zero(g)
    if not g:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return f.ring.one()
    if f == g:
        return f.monic()
    x = max(f.level, g.level)
    if f.degree(x) == 0:
        return gcd(f, content(g, x))
    if g.degree(x) == 0:
        return gcd(content(f, x), g)
    cf, cg = content(f, x), content(g, x)
    a, b = exact_quotient(f, cf), exact_quotient(g, cg)
    if a.degree(x) < b.degree(x):
        a, b = b, a
    while b and b.degree(x) > 0:
        _, _, r = pseudo_divide(a, b, x)
        a, b = b, primitive_part(r, x)
    # b == 0 leaves a as the primitive gcd; a constant-in-x remainder means coprime
    h = primitive_part(a, x) if not b else f.ring.one()
    return (gcd(cf, cg) * h).monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of ``f``, made monic."""
    if f.is_constant():
        return f.ring.one() if f else f
    g = f
    for i in sorted(f.var_indices()):
        g = gcd(g, f.derivative(i))
        if g.is_constant():
            return f.monic()
    return exact_quotient(f, g).monic()
