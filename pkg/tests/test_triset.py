import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charpairs.errors import ConstantPolynomialError, StructuralError
from charpairs.groebner import buchberger, saturate
from charpairs.polyring import Polynomial, VarOrdering
from charpairs.triset import (
    TriangularSet, has_projection_property_witness, is_normal, is_r_reduced, parameters,
    pquo_single, prem, prem_chain, prem_single, rational_roots, res_chain, resultant, sat_basis,
)

E = VarOrdering("x1 < x2 < x3 < x4")
x1, x2, x3, x4 = E.gens()
U = VarOrdering("u < x < y")
u, x, y = U.gens()
Y = VarOrdering("x < y")
yx, yy = Y.gens()


def names(vs):
    return {v.name for v in vs}


def test_triangular_set_validation():
    with pytest.raises(StructuralError):
        TriangularSet([x2 * x3, x1 * x2])
    with pytest.raises(StructuralError):
        TriangularSet([x1, x1 + 1])
    with pytest.raises(StructuralError):
        TriangularSet([E.one()])
    assert len(TriangularSet([], E)) == 0


def test_prem_single():
    assert prem_single(x2, x1 * x2) == 0
    assert prem_single(yy**2 + 1, yy - 1) == 2
    assert prem_single(yx, yy) == yx
    with pytest.raises(ConstantPolynomialError):
        prem_single(yx, Y.constant(3))


def test_pquo_single():
    assert pquo_single(yy**2 + 1, yy - 1) == yy + 1
    assert pquo_single(yx, yy) == 0
    # the multiplier exponent is always deg(p) - deg(q) + 1, never lowered
    assert pquo_single(x1**2 * x2, x1 * x2) == x1**2
    assert prem_single(x1**2 * x2, x1 * x2) == 0
    with pytest.raises(ConstantPolynomialError):
        pquo_single(yx, Y.one())


def test_prem_chain():
    assert prem_chain(x2 * x3, TriangularSet([x1 * x2])).remainder == 0
    p = x**2 * y + u
    cert = prem_chain(p, TriangularSet([x**3 - u]))
    assert cert.remainder == p and cert.multiplier == 1
    cert = prem_chain(u * y - x**3, TriangularSet([x**2 - u]))
    assert cert.remainder == u * y - u * x
    assert cert.check(u * y - x**3, [x**2 - u])


def test_res_chain():
    h = u**2 + 1
    T = TriangularSet([x**2 - u, u * y - x])
    assert res_chain(h, T) == h
    assert res_chain(yy - 1, TriangularSet([yy - 2])) == -1
    assert res_chain(yy, TriangularSet([yy])) == 0


def test_resultant_against_determinant():
    # res_x(x^2 + a x + b, x - c) = c^2 + a c + b
    R = VarOrdering("a < b < c < x")
    a, b, c, xx = R.gens()
    assert resultant(xx**2 + a * xx + b, xx - c, "x") == c**2 + a * c + b
    assert resultant(xx**2 - 1, xx**2 - 4, "x") == 9


def test_parameters():
    assert names(parameters(TriangularSet([x1 * x2, x3**2, x4]))) == {"x1"}
    R = VarOrdering("x < y")
    assert parameters(TriangularSet(list(R.gens()))) == []
    assert names(parameters(TriangularSet([x**2 - u, u * y - x]))) == {"u"}


def test_normality():
    assert is_normal(TriangularSet([x1 * x2, x3**2, x4]))
    assert not is_normal(TriangularSet([x1 * x2, x2 * x3, x4]))
    S = VarOrdering("a < x < y < z")
    a, sx, sy, sz = S.gens()
    assert is_normal(TriangularSet([a, sx + 1, sy, sz]))


def test_r_reducedness():
    assert is_r_reduced(TriangularSet([x**2 - u, u * y - x]))
    assert not is_r_reduced(TriangularSet([x**2 - u, u * y - x**3]))
    assert is_r_reduced(TriangularSet([x**5 - u]))


def test_sat_basis():
    R = VarOrdering("x < y < z")
    rx, ry, rz = R.gens()
    assert set(sat_basis(TriangularSet([ry**2, rx * rz + ry]))) == {ry**2, rx * rz + ry, ry * rz, rz**2}
    N = TriangularSet([rx**2 - 2, ry - rx, rz**2 + ry])
    assert sat_basis(N) == buchberger(list(N))
    assert set(sat_basis(TriangularSet([rx]))) == {rx}


def test_projection_falsifier():
    assert not has_projection_property_witness(TriangularSet([x**2 - u, u * y - x])).found
    rep = has_projection_property_witness(TriangularSet([x**2 - u, x * y + 1]))
    assert rep.found and rep.counterexample["u"] == 0
    assert not has_projection_property_witness(TriangularSet([x])).found


def test_rational_roots():
    assert rational_roots(6 * x**2 - x - 1, 1) == [-Fraction(1, 3), Fraction(1, 2)]
    assert rational_roots(x**2 + 1, 1) == []
    assert rational_roots(x**3 - x, 1) == [-1, 0, 1]


def _random_normal_set(rng):
    """Random normal set over u < x < y with initials in u only."""
    def coeff(*vs):
        p = U.constant(rng.randint(-2, 2))
        for v in vs:
            p = p + rng.randint(-2, 2) * v
        return p

    ix = U.constant(rng.choice([1, 2])) + rng.randint(0, 1) * u
    dx, dy = rng.randint(1, 2), rng.randint(1, 2)
    T1 = ix * x**dx + coeff(u)
    iy = U.constant(rng.choice([1, -1])) + rng.randint(0, 1) * u
    T2 = iy * y**dy + coeff(u, x) * (y if dy == 2 else U.one()) + coeff(u, x)
    return TriangularSet([T1, T2])


def _random_poly(rng):
    monos = [(i, j, k) for i in range(2) for j in range(3) for k in range(3) if i + j + k <= 3]
    return Polynomial(U, {m: rng.randint(-2, 2) for m in rng.sample(monos, 3)})


@pytest.mark.parametrize("seed", range(25))
def test_prem_characterises_saturation_for_normal_sets(seed):
    rng = random.Random(seed)
    T = _random_normal_set(rng)
    S = sat_basis(T)
    for f in [_random_poly(rng), _random_poly(rng) * T[1] + T[0] * _random_poly(rng), S[-1]]:
        assert (not prem(f, T)) == S.contains(f)


@pytest.mark.parametrize("seed", range(15))
def test_saturation_is_stable_under_nonvanishing_resultant(seed):
    rng = random.Random(100 + seed)
    T = _random_normal_set(rng)
    f = _random_poly(rng)
    if f and res_chain(f, T):
        S = sat_basis(T)
        assert saturate(list(S), f) == S


@pytest.mark.parametrize("seed", range(15))
def test_coefficientwise_prem(seed):
    rng = random.Random(200 + seed)
    T = TriangularSet([_random_normal_set(rng)[0]])
    coeffs = [_random_poly(rng).subs({"y": 0}) for _ in range(2)]
    if rng.random() < 0.5:
        coeffs = [c * T[0] for c in coeffs]
    P = coeffs[0] * y**2 + coeffs[1]
    assert (not prem(P, T)) == all(not prem(c, T) for c in coeffs)


@st.composite
def chain_inputs(draw):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 3), st.integers(0, 3)),
                                 st.integers(-3, 3), min_size=1, max_size=4))
    return Polynomial(U, terms)


@settings(max_examples=60, deadline=None)
@given(chain_inputs(), st.integers(1, 2), st.integers(-2, 2))
def test_prem_chain_certificate(p, dx, c):
    T = TriangularSet([(u + 1) * x**dx + c, u * y**2 + x * y - 1])
    cert = prem_chain(p, T)
    assert cert.check(p, list(T))
    r = cert.remainder
    assert r.degree("x") < dx and r.degree("y") < 2
