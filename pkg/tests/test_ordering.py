import pytest
from hypothesis import given, settings, strategies as st

from charpairs.errors import StructuralError
from charpairs.ordering import LEX, Cmp, block_lex, compare, lex_sort_key, poly_compare_lex, reorder
from charpairs.polyring import VarOrdering

E = VarOrdering("x1 < x2 < x3 < x4")
x1, x2, x3, x4 = E.gens()


def test_compare_examples():
    assert compare((0, 0, 2, 0), (0, 1, 1, 0), LEX) is Cmp.GT
    assert compare((1, 2, 0, 0), (1, 2, 0, 0)) is Cmp.EQ
    assert compare((5, 0), (0, 1)) is Cmp.LT
    with pytest.raises(StructuralError):
        compare((1, 0), (1, 0, 0))


def test_block_order_compares_greater_block_first():
    o = block_lex(2)
    assert compare((0, 5, 1), (9, 9, 0), o) is Cmp.GT
    assert compare((1, 0, 1), (0, 1, 1), o) is Cmp.LT
    with pytest.raises(StructuralError):
        compare((1, 0), (0, 1), block_lex(2))


def test_poly_compare_lex():
    assert poly_compare_lex(x2 * x3, x3**2) is Cmp.LT
    assert poly_compare_lex(x1 + x4, x1 + x4) is Cmp.EQ
    assert poly_compare_lex(x2, x2 + 1) is Cmp.LT
    assert poly_compare_lex(x2 + 2, x2 + 1) is Cmp.GT


def test_reorder():
    R = VarOrdering("x < y")
    x, y = R.gens()
    swapped = VarOrdering("y < x")
    p = reorder(x * y + 1, swapped)
    assert p.ring == swapped and p.evaluate({"x": 3, "y": -2}) == -5
    assert reorder(x * y + 1, R) == x * y + 1
    U = VarOrdering("u < x")
    u, ux = U.gens()
    assert reorder(ux**2 - u, VarOrdering("x < u")).lv().name == "u"
    with pytest.raises(StructuralError):
        reorder(ux, VarOrdering("u < y"))


monos = st.tuples(*[st.integers(0, 3)] * 3)
orders = st.sampled_from([LEX, block_lex(1), block_lex(2)])


@settings(max_examples=200, deadline=None)
@given(monos, monos, monos, orders)
def test_compare_is_a_monomial_order(u, v, w, o):
    assert compare(u, v, o) == -compare(v, u, o)
    if compare(u, v, o) is Cmp.GT and compare(v, w, o) is Cmp.GT:
        assert compare(u, w, o) is Cmp.GT
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    assert compare(uw, vw, o) == compare(u, v, o)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(monos, st.integers(-3, 3)), min_size=1, max_size=4),
       st.lists(st.tuples(monos, st.integers(-3, 3)), min_size=1, max_size=4))
def test_sort_key_agrees_with_comparison(a, b):
    from charpairs.polyring import Polynomial

    R = VarOrdering("x < y < z")
    p, q = Polynomial(R, a), Polynomial(R, b)
    if not p or not q:
        return
    c = poly_compare_lex(p, q)
    ka, kb = lex_sort_key(p), lex_sort_key(q)
    assert c == (Cmp.LT if ka < kb else Cmp.GT if ka > kb else Cmp.EQ)
    if p.leading_monomial() != q.leading_monomial():
        assert c == compare(p.leading_monomial(), q.leading_monomial())
