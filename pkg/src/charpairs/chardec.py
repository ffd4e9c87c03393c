"""Characteristic decomposition by splitting on initials.

A work queue of generating sets is processed in FIFO order.  Each set is
turned into its reduced lex basis and W-characteristic set; a normal set
yields a characteristic pair, an abnormal one is split according to the
four cases below.  Every branch adjoins one polynomial that is not in the
parent ideal, so the tree is finite.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import CertificateError, DecompositionAborted, InputError, StructuralError
from .gcd import squarefree_part
from .groebner import GroebnerBasis, buchberger
from .polyring import Polynomial, VarOrdering, divide
from .triset import (
    TriangularSet,
    first_abnormal_index,
    is_normal,
    is_r_reduced_wrt,
    parameters,
    pquo_single,
    prem,
    sat_basis,
)
from .wchar import WCharSet, w_char_set

log = logging.getLogger(__name__)

CASE_NORMAL = "1"
CASE_NOT_REDUCED = "2.1"
CASE_QUOTIENT_INITIAL = "2.2.1"
CASE_QUOTIENT_REMAINDER = "2.2.2"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class CharacteristicPair:
    gb: GroebnerBasis
    wchar: WCharSet
    strong: bool

    @property
    def order(self) -> VarOrdering:
        return self.gb.ring

    @property
    def parameters(self) -> list:
        return parameters(self.wchar)

    @classmethod
    def from_basis(cls, gb: GroebnerBasis, strong: Optional[bool] = None) -> "CharacteristicPair":
        C = w_char_set(gb)
        if not is_normal(C):
            raise StructuralError("the W-characteristic set is not normal")
        if strong is None:
            strong = sat_basis(C) == gb
        return cls(gb, C, strong)

    def __str__(self) -> str:
        g = ", ".join(map(str, self.gb))
        c = ", ".join(map(str, self.wchar))
        return f"({{{g}}}, [{c}])"


@dataclass(frozen=True)
class SplitBranch:
    """One child of a split: its generators and the polynomial it adjoins."""

    generators: tuple
    provenance: str
    adjoined: Polynomial


@dataclass
class SplitNode:
    id: int
    parent: Optional[int]
    generators: tuple
    ring: VarOrdering
    basis: Optional[GroebnerBasis] = None
    wchar: Optional[WCharSet] = None
    case: Optional[str] = None
    branches: list = field(default_factory=list)
    children: list = field(default_factory=list)
    provenance: Optional[str] = None
    duplicate_of: Optional[int] = None
    reorders: int = 0
    relations_hold: Optional[bool] = None


@dataclass
class Decomposition:
    pairs: list
    nodes: list
    case_log: list

    @property
    def empty_zero_set(self) -> bool:
        return not self.pairs

    @property
    def orderings(self) -> list:
        out = []
        for p in self.pairs:
            if p.order not in out:
                out.append(p.order)
        return out

    @property
    def mixed_orderings(self) -> bool:
        return len(self.orderings) > 1

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


# ------------------------------------------------------------ order handling

def check_order_assumption(C: TriangularSet) -> bool:
    """Every parameter precedes every leading variable."""
    params = [v.index for v in parameters(C)]
    lvs = C.levels()
    return not params or not lvs or max(params) < min(lvs)


def heuristic_reorder(C: TriangularSet, current: VarOrdering) -> VarOrdering:
    """Parameters first, then leading variables, each keeping its relative order."""
    if check_order_assumption(C):
        raise StructuralError("the variable order already satisfies the assumption")
    lvs = set(C.levels())
    names = [current.names[i] for i in range(len(current)) if i not in lvs]
    names += [current.names[i] for i in sorted(lvs)]
    return VarOrdering(names)


# ------------------------------------------------------------------ splitting

def _branch_generators(G: GroebnerBasis, h: Polynomial, simplify: bool) -> tuple:
    """Generators of ``<G, h>``.

    With ``simplify`` every element of ``G`` is reduced by ``h`` alone and
    replaced by its square-free part.  The ideal may grow but its radical,
    and hence the zero set, is unchanged.
    """
    if not simplify:
        return tuple(G) + (h,)
    h = squarefree_part(h)
    out = [h]
    for g in G:
        r = divide(g, h)[1]
        if r:
            r = squarefree_part(r)
            if r not in out:
                out.append(r)
    return tuple(out)


def _initial_branches(C: TriangularSet, keep) -> list:
    out = []
    for i, T in enumerate(C):
        if keep(T):
            out.append((T.ini(), f"initial of element {i + 1}"))
    return out


def _classify(G: GroebnerBasis, C: TriangularSet):
    """Case label, adjoined polynomials with provenance, and whether the
    pseudo-divisibility relations behind the split were confirmed."""
    k = first_abnormal_index(C)
    if k is None:
        return CASE_NORMAL, _initial_branches(C, lambda T: True), True
    polys = C.polys
    I = polys[k].ini()
    y = I.level
    l = next((j for j, T in enumerate(polys) if T.level == y), None)
    if l is None:
        raise StructuralError(f"no element of the triangular set is led by {I.lv()}")
    Cl = polys[l]
    if not is_r_reduced_wrt(I, Cl):
        holds = not prem(I, polys[: l + 1]) and not prem(polys[k], polys[:k])
        branches = [(I, "abnormal initial")]
        branches += _initial_branches(C, lambda T: T.level <= y)
        return CASE_NOT_REDUCED, branches, holds
    holds = not prem(Cl, list(polys[:l]) + [I])
    below = polys[:l]
    Q = pquo_single(Cl, I)
    if not prem(Q.ini(), below):
        branches = [(I.ini(), "initial of the abnormal initial")]
        branches += _initial_branches(C, lambda T: T.level < y)
        return CASE_QUOTIENT_INITIAL, branches, holds
    branches = [(prem(Q, below), "pseudo-remainder of the quotient"), (I, "abnormal initial")]
    branches += _initial_branches(C, lambda T: T.level < y)
    return CASE_QUOTIENT_REMAINDER, branches, holds


def split_case(G: GroebnerBasis, C: WCharSet, simplify: bool = False):
    """Return ``(case_label, branches)`` for one node of the decomposition.

    Constant adjoined polynomials are dropped (they give the unit ideal).
    Raises :class:`CertificateError` if an adjoined polynomial already lies
    in ``<G>``, which would break termination.
    """
    if tuple(C.polys) != tuple(w_char_set(G).polys):
        raise StructuralError("the triangular set was not extracted from this basis")
    label, adjoined, _ = _classify(G, C)
    return label, _make_branches(G, adjoined, simplify)


def _make_branches(G: GroebnerBasis, adjoined: list, simplify: bool) -> list:
    branches = []
    for h, provenance in adjoined:
        if h.is_constant() and h:
            continue
        if not G.normal_form(h):
            raise CertificateError(f"adjoined polynomial {h} already lies in the ideal")
        branches.append(SplitBranch(_branch_generators(G, h, simplify), provenance, h))
    return branches


# --------------------------------------------------------------- node worker

@dataclass
class _Expansion:
    ring: VarOrdering
    basis: GroebnerBasis
    wchar: Optional[WCharSet]
    case: str
    branches: list
    child_bases: list
    reorders: int
    relations_hold: Optional[bool]


def _expand(generators: tuple, ring: VarOrdering, basis: Optional[GroebnerBasis],
            simplify: bool, max_reorders: int) -> _Expansion:
    reorders = 0
    while True:
        if basis is None:
            basis = buchberger(generators, ring=ring)
        if basis.is_unit():
            return _Expansion(ring, basis, None, INCONSISTENT, [], [], reorders, None)
        C = w_char_set(basis)
        if not is_normal(C) and not check_order_assumption(C):
            if reorders >= max_reorders:
                raise DecompositionAborted(
                    f"variable order assumption still fails after {reorders} reorders "
                    f"(ordering {ring}, basis {list(map(str, basis))})")
            new_ring = heuristic_reorder(C, ring)
            log.info("reordering %s -> %s", ring, new_ring)
            ring = new_ring
            generators = tuple(g.to_ring(ring) for g in basis)
            basis = None
            reorders += 1
            continue
        label, adjoined, holds = _classify(basis, C)
        branches = _make_branches(basis, adjoined, simplify)
        child_bases = [buchberger(b.generators, ring=ring) for b in branches]
        return _Expansion(ring, basis, C, label, branches, child_bases, reorders, holds)


def _expand_job(args) -> _Expansion:
    return _expand(*args)


def _basis_key(basis: GroebnerBasis):
    return (basis.ring.names, tuple(basis.polys))


def char_dec(F: Iterable[Polynomial], order: Optional[VarOrdering] = None, *,
             simplify: bool = True, workers: int = 1,
             max_reorders: Optional[int] = None,
             compute_strong: bool = True) -> Decomposition:
    """Characteristic decomposition of ``F``.

    ``simplify`` replaces each branch's generators by square-free reduced
    ones (same radical, smaller bases).  With ``workers > 1`` the queue is
    processed in waves on a process pool; the result is identical to the
    sequential run.
    """
    F = list(F)
    if not F:
        raise InputError("char_dec needs at least one polynomial")
    if order is None:
        order = F[0].ring
    F = [f.to_ring(order) for f in F]
    if any(not f for f in F):
        raise InputError("the input contains the zero polynomial")
    if max_reorders is None:
        max_reorders = len(order)

    nodes: list = []
    pairs: list = []
    case_log: list = []
    seen: dict = {}

    def new_node(parent, gens, ring, basis, provenance):
        node = SplitNode(len(nodes), parent, tuple(gens), ring, basis, provenance=provenance)
        nodes.append(node)
        if parent is not None:
            nodes[parent].children.append(node.id)
        return node

    root = new_node(None, F, order, None, None)
    queue = [root]
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while queue:
            wave = queue if pool is not None else queue[:1]
            queue = queue[len(wave):]
            jobs = [(n.generators, n.ring, n.basis, simplify, max_reorders) for n in wave]
            if pool is not None:
                results = list(pool.map(_expand_job, jobs))
            else:
                results = [_expand_job(jobs[0])]
            for node, res in zip(wave, results):
                node.ring, node.basis, node.wchar = res.ring, res.basis, res.wchar
                node.case, node.branches = res.case, res.branches
                node.reorders, node.relations_hold = res.reorders, res.relations_hold
                seen.setdefault(_basis_key(res.basis), node.id)
                if res.case == INCONSISTENT:
                    continue
                case_log.append(res.case)
                if res.case == CASE_NORMAL:
                    strong = None if compute_strong else False
                    pairs.append(CharacteristicPair.from_basis(res.basis, strong))
                for branch, cb in zip(res.branches, res.child_bases):
                    child = new_node(node.id, branch.generators, res.ring, cb, branch.provenance)
                    key = _basis_key(cb)
                    if cb.is_unit():
                        child.case = INCONSISTENT
                    elif key in seen:
                        child.duplicate_of = seen[key]
                    else:
                        seen[key] = child.id
                        queue.append(child)
    finally:
        if pool is not None:
            pool.shutdown()
    return Decomposition(pairs, nodes, case_log)
