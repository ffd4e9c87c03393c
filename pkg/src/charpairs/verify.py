"""Independent certification of bases, pairs and decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .chardec import CharacteristicPair, Decomposition
from .groebner import GroebnerBasis, buchberger, ideal_intersect, radical_member, s_polynomial
from .polyring import Polynomial
from .triset import prem, sat_basis
from .wchar import w_char_set

PASS, FAIL, SKIP = "pass", "fail", "skip"

# covering is an elimination in one extra variable per pair; beyond this
# many variables it only runs on request
DEEP_THRESHOLD = 4


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: Optional[str] = None

    def __str__(self) -> str:
        tail = f": {self.witness}" if self.witness else ""
        return f"[{self.status}] {self.name}{tail}"


@dataclass
class VerificationReport:
    subject: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def add(self, name: str, witness=None, skip: bool = False) -> None:
        """Record ``name``; a non-None ``witness`` marks a failure."""
        if skip:
            self.checks.append(Check(name, SKIP, witness))
        elif witness is None:
            self.checks.append(Check(name, PASS))
        else:
            self.checks.append(Check(name, FAIL, str(witness)))

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness))

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [{"name": c.name, "status": c.status, "witness": c.witness}
                       for c in self.checks],
        }

    def __str__(self) -> str:
        head = f"{self.subject}: {'pass' if self.passed else 'FAIL'}"
        return "\n".join([head] + [f"  {c}" for c in self.checks])


def _first(items: Iterable, bad) -> Optional[str]:
    for item in items:
        w = bad(item)
        if w is not None:
            return w
    return None


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def verify_gb(G: GroebnerBasis, F: Iterable[Polynomial]) -> VerificationReport:
    F = [f.to_ring(G.ring) for f in F]
    rep = VerificationReport(f"Groebner basis of {len(F)} generators")
    polys = list(G)

    def spoly_bad(pair):
        f, g = pair
        r = G.normal_form(s_polynomial(f, g, G.order))
        return f"S({f}, {g}) reduces to {r}" if r else None

    rep.add("S-polynomials reduce to zero", _first(combinations(polys, 2), spoly_bad))

    def reduced_bad(g):
        if g.leading_coefficient() != 1:
            return f"{g} is not monic"
        for h in polys:
            if h is g:
                continue
            lm = h.leading_monomial()
            for m, _ in g.items():
                if _divides(lm, m):
                    return f"leading term of {h} divides a term of {g}"
        return None

    rep.add("basis is reduced", _first(polys, reduced_bad))
    rep.add("generators reduce to zero",
            _first(F, lambda f: f"{f} reduces to {G.normal_form(f)}" if G.normal_form(f) else None))
    again = buchberger(F, G.order, G.ring)
    rep.add("basis equals the recomputed basis of the generators",
            None if again == G else "recomputed {" + ", ".join(map(str, again)) + "}")
    return rep


def verify_pair(p: CharacteristicPair) -> VerificationReport:
    G, C = p.gb, p.wchar
    rep = VerificationReport(f"pair {p}")
    members = set(G.polys)
    rep.add("triangular set lies in the basis",
            _first(C, lambda c: None if c in members else f"{c} is not in the basis"))
    try:
        again = w_char_set(G)
        rep.add("triangular set is the W-characteristic set",
                None if tuple(again) == tuple(C) else "re-extracted [" + ", ".join(map(str, again)) + "]")
    except Exception as exc:  # an empty or unit basis has none
        rep.add("triangular set is the W-characteristic set", str(exc))
    params = {v.index for v in C.parameters()}
    rep.add("triangular set is normal",
            _first(C, lambda c: None if c.ini().var_indices() <= params
                   else f"initial {c.ini()} involves a leading variable"))
    rep.add("basis pseudo-reduces to zero",
            _first(G, lambda g: f"prem({g}) = {prem(g, C)}" if prem(g, C) else None))
    sat = sat_basis(C)
    rep.add("basis lies in the saturated ideal",
            _first(G, lambda g: f"{g} is not in the saturation" if not sat.contains(g) else None))
    if p.strong:
        rep.add("saturated ideal lies in the ideal of the basis",
                _first(sat, lambda s: f"{s} reduces to {G.normal_form(s)}" if G.normal_form(s) else None))
    return rep


def _intersection(bases: list, ring) -> GroebnerBasis:
    acc = bases[0]
    for b in bases[1:]:
        acc = ideal_intersect(list(acc), list(b), ring)
    return acc


def _tree_checks(d: Decomposition, rep: VerificationReport) -> None:
    def guard_bad(node):
        if node.basis is None:
            return None
        for br in node.branches:
            if not node.basis.normal_form(br.adjoined):
                return f"node {node.id} adjoins {br.adjoined}, already in its ideal"
        return None

    rep.add("every split adjoins a polynomial outside the parent ideal", _first(d.nodes, guard_bad))

    def grow_bad(node):
        if node.parent is None or node.basis is None:
            return None
        parent = d.nodes[node.parent].basis
        for g in parent:
            if node.basis.normal_form(g.to_ring(node.basis.ring)):
                return f"node {node.id} loses parent element {g}"
        return None

    rep.add("branch ideals contain their parent ideal", _first(d.nodes, grow_bad))


def verify_decomposition(F: Iterable[Polynomial], d: Decomposition,
                         deep: bool = False) -> VerificationReport:
    F = list(F)
    ring = F[0].ring
    rep = VerificationReport(f"decomposition into {len(d.pairs)} pairs")
    for i, p in enumerate(d.pairs):
        rep.extend(verify_pair(p), prefix=f"pair {i + 1}: ")
    _tree_checks(d, rep)
    if d.empty_zero_set:
        rep.add("input generates the unit ideal",
                None if buchberger(F, ring=ring).is_unit() else "1 is not in the ideal of the input")
        return rep

    def sound_bad(p):
        for f in F:
            g = f.to_ring(p.order)
            if not radical_member(g, p.gb):
                return f"{f} does not vanish on the zeros of {p}"
        return None

    rep.add("every input polynomial vanishes on every pair", _first(d.pairs, sound_bad))
    if len(ring) > DEEP_THRESHOLD and not deep:
        rep.add("pairs cover the input zero set", "needs deep mode", skip=True)
        return rep
    bases = [p.gb if p.order == ring else buchberger(p.gb.to_ring(ring), ring=ring)
             for p in d.pairs]
    inter = _intersection(bases, ring)
    FG = buchberger(F, ring=ring)
    rep.add("pairs cover the input zero set",
            _first(inter, lambda h: None if radical_member(h, FG) else f"{h} is not in the radical of the input"))
    return rep
