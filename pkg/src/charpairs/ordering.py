"""Term orders and variable-order permutations."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

from .errors import StructuralError
from .polyring import Monomial, Polynomial, VarOrdering


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _cmp(a, b) -> Cmp:
    return Cmp.LT if a < b else Cmp.GT if a > b else Cmp.EQ


@dataclass(frozen=True)
class TermOrder:
    """``lex`` or ``block_lex``.

    For ``block_lex`` the variables with index ``>= block_split`` form the
    greater (eliminated) block.  Each block is compared lexicographically,
    the greater block first.
    """

    kind: str = "lex"
    block_split: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("lex", "block_lex"):
            raise StructuralError(f"unknown term order {self.kind!r}")
        if self.kind == "block_lex" and (self.block_split is None or self.block_split < 1):
            raise StructuralError("block_lex needs block_split >= 1")
        if self.kind == "lex" and self.block_split is not None:
            raise StructuralError("lex takes no block_split")

    def check_arity(self, n: int) -> None:
        if self.kind == "block_lex" and not 1 <= self.block_split <= n - 1:
            raise StructuralError(f"block_split {self.block_split} outside 1..{n - 1}")

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m[::-1]
        s = self.block_split
        return (m[s:][::-1], m[:s][::-1])

    def permutation(self, n: int) -> tuple:
        """Coordinate permutation under which plain tuple comparison is this order.

        Both supported orders compare one variable at a time, greatest first,
        so the permutation is the reversal.
        """
        self.check_arity(n)
        return tuple(range(n - 1, -1, -1))


LEX = TermOrder()


def block_lex(split: int) -> TermOrder:
    return TermOrder("block_lex", split)


def compare(u: Monomial, v: Monomial, order: TermOrder = LEX) -> Cmp:
    if len(u) != len(v):
        raise StructuralError(f"monomials of different arity: {u} vs {v}")
    order.check_arity(len(u))
    return _cmp(order.key(tuple(u)), order.key(tuple(v)))


def poly_compare_lex(p: Polynomial, q: Polynomial) -> Cmp:
    """Compare descending term sequences; a proper prefix is smaller.

    Monomials are compared first along the whole sequence; coefficients
    break remaining ties so that the order is total on distinct polynomials.
    """
    if p.ring != q.ring:
        raise StructuralError(f"ordering mismatch: {p.ring} vs {q.ring}")
    a, b = p.items(), q.items()
    for (ma, _), (mb, _) in zip(a, b):
        if ma != mb:
            return _cmp(ma[::-1], mb[::-1])
    if len(a) != len(b):
        return _cmp(len(a), len(b))
    for (_, ca), (_, cb) in zip(a, b):
        if ca != cb:
            return _cmp(ca, cb)
    return Cmp.EQ


def lex_sort_key(p: Polynomial):
    """Sort key consistent with :func:`poly_compare_lex`."""
    items = p.items()
    return (tuple(m[::-1] for m, _ in items), tuple(c for _, c in items))


def reorder(p: Polynomial, new_order: VarOrdering) -> Polynomial:
    """Re-index ``p`` under a permutation of its ordering."""
    if sorted(new_order.names) != sorted(p.ring.names):
        raise StructuralError(f"{new_order} is not a permutation of {p.ring}")
    return p.to_ring(new_order)
