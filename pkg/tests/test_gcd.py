from hypothesis import given, settings, strategies as st

from charpairs.gcd import gcd, squarefree_part
from charpairs.polyring import Polynomial, VarOrdering, divides

R = VarOrdering("x < y < z")
x, y, z = R.gens()


def test_gcd_examples():
    assert gcd((x + y) * (x - 1), (x + y) * (y + 2)) == x + y
    assert gcd(x**2 - 1, x - 1) == x - 1
    assert gcd(x * y, z) == 1
    assert gcd(R.zero(), 3 * y) == y


def test_squarefree_part():
    assert squarefree_part((x + 1) ** 3 * y**2) == x * y + y
    assert squarefree_part(4 * z**2) == z
    assert squarefree_part(x**2 - y**2) == y**2 - x**2


small = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(0, 1)),
                        st.integers(-3, 3), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(small, small, small)
def test_gcd_divides_both_and_keeps_common_factor(a, b, c):
    f, g, h = Polynomial(R, a), Polynomial(R, b), Polynomial(R, c)
    if not (f and g and h):
        return
    d = gcd(f * h, g * h)
    assert divides(d, f * h) and divides(d, g * h)
    assert divides(h, d)
