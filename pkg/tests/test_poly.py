from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_div, gf_gcdex, gf_irreducible_p, gf_sqf_p

from toroidal_ff.gf import get_field
from toroidal_ff.poly import PolyRing, degree, trim



def polys(p, max_deg=6):
    return st.lists(st.integers(0, p - 1), max_size=max_deg + 1).map(lambda c: trim(c))


def nonzero_polys(p, max_deg=5):
    return polys(p, max_deg).filter(lambda a: a != ())


def hl(a):
    return [ZZ(c) for c in reversed(a)]


def lh(a, p):
    return trim([int(c) % p for c in reversed(a)])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.data())
def test_divmod_matches_reference(p, data):
    R = PolyRing(get_field(p))
    a = data.draw(polys(p))
    b = data.draw(nonzero_polys(p))
    qq, r = R.divmod(a, b)
    rq, rr = gf_div(hl(a), hl(b), p, ZZ)
    assert qq == lh(rq, p) and r == lh(rr, p)
    assert R.add(R.mul(qq, b), r) == a


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.data())
def test_xgcd_bezout_and_monic_gcd(p, data):
    R = PolyRing(get_field(p))
    a = data.draw(nonzero_polys(p))
    b = data.draw(nonzero_polys(p))
    g, s, t = R.xgcd(a, b)
    assert R.add(R.mul(s, a), R.mul(t, b)) == g
    _, _, ref = gf_gcdex(hl(a), hl(b), p, ZZ)
    assert R.monic(g) == lh(ref, p)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_resultant_is_the_sylvester_determinant(p, data):
    R = PolyRing(get_field(p))
    a = data.draw(nonzero_polys(p, 4))
    b = data.draw(nonzero_polys(p, 4))
    if degree(a) == 0 and degree(b) == 0:
        return
    assert R.resultant(a, b) == int(_sylvester(a, b).det()) % p


def _sylvester(a, b):
    n, m = degree(a), degree(b)
    ah, bh = list(reversed(a)), list(reversed(b))
    rows = [[0] * i + ah + [0] * (m - 1 - i) for i in range(m)]
    rows += [[0] * i + bh + [0] * (n - 1 - i) for i in range(n)]
    return Matrix(rows)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.data())
def test_squarefree_and_irreducible_predicates(p, data):
    R = PolyRing(get_field(p))
    a = R.monic(data.draw(nonzero_polys(p, 6)))
    if degree(a) < 1:
        return
    assert R.is_squarefree(a) == bool(gf_sqf_p(hl(a), p, ZZ))
    assert R.is_irreducible(a) == bool(gf_irreducible_p(hl(a), p, ZZ))


def test_extension_field_coefficients():
    F = get_field(2, 2)
    R = PolyRing(F)
    w = 2  # the class of t in GF(4)
    a = (w, 1)       # x + w
    b = (F.mul(w, w), 0, 1)
    q, r = R.divmod(b, a)
    assert R.add(R.mul(q, a), r) == b
    assert R.eval(b, w) == F.add(F.mul(w, w), F.mul(w, w)) == 0


def test_enumeration_counts():
    R = PolyRing(get_field(3))
    assert len(list(R.monic_polys(2))) == 9
    assert len(list(R.polys_below(2))) == 9


def test_powmod_and_compose():
    R = PolyRing(get_field(5))
    m = (2, 0, 1)
    assert R.powmod((0, 1), 25, m) == R.mod(R.pow((0, 1), 25), m)
    assert R.compose((1, 1), (0, 0, 1)) == (1, 0, 1)
    assert R.deriv((1, 2, 3)) == (2, 1)
