"""Strong characteristic pairs and Ritt characteristic sets."""

from __future__ import annotations

from dataclasses import dataclass

from .chardec import CharacteristicPair, Decomposition
from .errors import CertificateError, StructuralError
from .polyring import divide
from .triset import TriangularSet, is_normal, is_r_reduced, parameters, prem, prem_chain, sat_basis
from .wchar import w_char_set


@dataclass(frozen=True)
class StrongPairCertificate:
    """``initial_divisibility`` holds ``(new_initial, old_initial, cofactor)``
    with ``old_initial == cofactor * new_initial``."""

    original: CharacteristicPair
    strong_pair: CharacteristicPair
    param_match: bool
    initial_divisibility: tuple
    sat_equal: bool


def _same_saturation(A: TriangularSet, B: TriangularSet) -> bool:
    """Mutual membership for normal sets, where membership in sat is prem == 0."""
    return all(not prem(a, B) for a in A) and all(not prem(b, A) for b in B)


def strong_transform(p: CharacteristicPair) -> StrongPairCertificate:
    C = p.wchar
    if not is_normal(C):
        raise StructuralError("strong_transform needs a normal W-characteristic set")
    gbar = sat_basis(C)
    cbar = w_char_set(gbar)
    if not is_normal(cbar):
        raise CertificateError(f"the saturated set {cbar} is not normal")
    param_match = parameters(cbar) == parameters(C)
    if not param_match or cbar.levels() != C.levels():
        raise CertificateError("parameters changed under saturation")
    divisibility = []
    for new, old in zip(cbar, C):
        q, r = divide(old.ini(), new.ini())
        if r:
            raise CertificateError(f"{new.ini()} does not divide {old.ini()}")
        divisibility.append((new.ini(), old.ini(), q))
    sat_equal = _same_saturation(cbar, C)
    if not sat_equal:
        raise CertificateError("the saturated ideals of the two sets differ")
    strong = sat_basis(cbar) == gbar
    if not strong:
        raise CertificateError("the transformed pair is not strong")
    pair = CharacteristicPair(gbar, cbar, True)
    return StrongPairCertificate(p, pair, param_match, tuple(divisibility), sat_equal)


def strong_decomposition(d: Decomposition) -> Decomposition:
    """Replace every pair by its strong counterpart; no new splitting happens."""
    pairs = [strong_transform(p).strong_pair for p in d.pairs]
    return Decomposition(pairs, d.nodes, list(d.case_log))


def ritt_cstar(C: TriangularSet) -> TriangularSet:
    """Each element pseudo-reduced by the elements below it."""
    if not is_normal(C):
        raise StructuralError("ritt_cstar needs a normal triangular set")
    polys = list(C)
    out = []
    for i, c in enumerate(polys):
        r = prem(c, polys[:i]) if i else c
        if r.is_constant() or r.level != c.level:
            raise CertificateError(f"pseudo-reduction of {c} lost its leading variable")
        out.append(r)
    star = TriangularSet(out, C.ring)
    if not is_normal(star) or not is_r_reduced(star):
        raise CertificateError(f"{star} is not a normal R-reduced set")
    return star


def cstar_initials_match(C: TriangularSet, star: TriangularSet) -> bool:
    """``ini(star_i)`` equals the pseudo-division multiplier times ``ini(C_i)``."""
    polys = list(C)
    for i, (c, s) in enumerate(zip(polys, star)):
        cert = prem_chain(c, polys[:i])
        if cert.remainder != s or cert.multiplier * c.ini() != s.ini():
            return False
    return True


def monic_basis_shape(star: TriangularSet) -> bool:
    """Syntactic test that dividing each element by its initial gives a
    reduced lex basis over the field of parameter fractions: the initials
    involve parameters only and no element has a degree reaching that of a
    lower element in its leading variable."""
    return is_normal(star) and is_r_reduced(star)
