import pytest

from charpairs.chardec import CharacteristicPair, Decomposition, char_dec
from charpairs.errors import StructuralError
from charpairs.groebner import GroebnerBasis, buchberger
from charpairs.polyring import VarOrdering
from charpairs.strongritt import (
    cstar_initials_match, monic_basis_shape, ritt_cstar, strong_decomposition, strong_transform,
)
from charpairs.triset import TriangularSet, is_normal, is_r_reduced, parameters, prem, sat_basis

from systems import random_systems, three_equation_system

W = VarOrdering("x < y < z")
x, y, z = W.gens()
U = VarOrdering("u < x < y")
u, ux, uy = U.gens()


def test_strong_transform_example():
    G = GroebnerBasis([y**2, x**2 * z + x * y, y * z + x * z + y], W)
    p = CharacteristicPair.from_basis(G)
    assert not p.strong
    cert = strong_transform(p)
    sp = cert.strong_pair
    assert set(sp.gb) == {y**2, x * z + y, y * z, z**2}
    assert list(sp.wchar) == [y**2, x * z + y]
    assert cert.param_match and cert.sat_equal and sp.strong
    assert [v.name for v in parameters(sp.wchar)] == ["x"] == [v.name for v in parameters(p.wchar)]
    assert [(str(n), str(o), str(q)) for n, o, q in cert.initial_divisibility] == [
        ("1", "1", "1"), ("x", "x^2", "x")]


def test_strong_transform_fixes_strong_pairs():
    p = CharacteristicPair.from_basis(GroebnerBasis([x, y], W))
    assert strong_transform(p).strong_pair.gb == p.gb
    R, F = three_equation_system()
    strong = [q for q in char_dec(F, R).pairs if q.strong]
    assert strong and all(strong_transform(q).strong_pair.gb == q.gb for q in strong)


def test_strong_decomposition():
    R, F = three_equation_system()
    d = char_dec(F, R)
    sd = strong_decomposition(d)
    assert len(sd.pairs) == 4 and all(p.strong for p in sd.pairs)
    a, rx, ry, rz = R.gens()
    assert set(sd.pairs[0].gb) == {rx + 1, ry, rz}
    empty = Decomposition([], [], [])
    assert strong_decomposition(empty).pairs == []
    again = strong_decomposition(sd)
    assert [p.gb for p in again.pairs] == [p.gb for p in sd.pairs]


def test_ritt_cstar_examples():
    T = TriangularSet([ux**2 - u, u * uy - ux])
    assert ritt_cstar(T) == T
    assert list(ritt_cstar(TriangularSet([ux**2 - u, u * uy - ux**3]))) == [ux**2 - u, u * uy - u * ux]
    R, F = three_equation_system()
    a, rx, ry, rz = R.gens()
    C2 = TriangularSet([rx + 1, ry, a * rz])
    assert ritt_cstar(C2) == C2
    with pytest.raises(StructuralError):
        ritt_cstar(TriangularSet([ux * uy - 1, uy**2 * u + ux]))


@pytest.mark.parametrize("polys,ring", random_systems(40, seed=21))
def test_ritt_set_properties(polys, ring):
    for p in char_dec(polys, ring).pairs:
        star = ritt_cstar(p.wchar)
        assert is_normal(star) and is_r_reduced(star)
        assert cstar_initials_match(p.wchar, star)
        assert all(not prem(g, star) for g in p.gb)
        assert sat_basis(star) == sat_basis(p.wchar)
        assert monic_basis_shape(star)


@pytest.mark.parametrize("polys,ring", random_systems(40, seed=22))
def test_strong_transform_certificates(polys, ring):
    d = char_dec(polys, ring)
    sd = strong_decomposition(d)
    assert len(sd.pairs) == len(d.pairs)
    for p, q in zip(d.pairs, sd.pairs):
        assert q.strong and sat_basis(q.wchar) == q.gb
        assert q.gb == sat_basis(p.wchar)
