"""W-characteristic sets of reduced lex Groebner bases."""

from __future__ import annotations

from .errors import StructuralError
from .groebner import GroebnerBasis
from .ordering import lex_sort_key
from .triset import TriangularSet


class WCharSet(TriangularSet):
    """A triangular set remembering the basis it was extracted from."""

    __slots__ = ("source",)

    def __init__(self, polys, source: GroebnerBasis):
        super().__init__(polys, source.ring)
        self.source = source

    @property
    def tset(self) -> TriangularSet:
        return TriangularSet(self.polys, self.ring)


def w_char_set(G: GroebnerBasis) -> WCharSet:
    """Lex-minimal element per leading variable, ascending."""
    if not len(G) or G.is_unit():
        raise StructuralError("no W-characteristic set: the basis is empty or {1}")
    best: dict = {}
    for g in G:
        if g.is_constant():
            raise StructuralError(f"no W-characteristic set: constant {g} in basis")
        cur = best.get(g.level)
        if cur is None or lex_sort_key(g) < lex_sort_key(cur):
            best[g.level] = g
    return WCharSet([best[k] for k in sorted(best)], G)
