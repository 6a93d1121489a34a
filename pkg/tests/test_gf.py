import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem

from toroidal_ff.errors import ResourceLimitError
from toroidal_ff.gf import CONWAY, FiniteField, embedding, get_field, is_prime, restriction

FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2)]


def _high_to_low(F, a):
    return [ZZ(c) for c in reversed(F.to_coeffs(a))] or [ZZ(0)]


def _from_sympy(F, poly):
    coeffs = [int(c) % F.p for c in reversed(poly)]
    return F.from_coeffs(coeffs + [0] * (F.k - len(coeffs)))


def _modulus(F):
    return [ZZ(c) for c in reversed(F.modulus)]


@pytest.mark.parametrize("p,k", FIELDS)
def test_multiplication_matches_reference_polynomial_arithmetic(p, k):
    F = get_field(p, k)
    m = _modulus(F)
    for a in range(F.q):
        for b in range(0, F.q, max(1, F.q // 11)):
            ref = gf_rem(gf_mul(_high_to_low(F, a), _high_to_low(F, b), p, ZZ), m, p, ZZ)
            assert F.mul(a, b) == _from_sympy(F, ref)
            ref_add = gf_add(_high_to_low(F, a), _high_to_low(F, b), p, ZZ)
            assert F.add(a, b) == _from_sympy(F, ref_add)


@pytest.mark.parametrize("key", sorted(k for k in CONWAY if k[0] ** k[1] <= 2 ** 12))
def test_table_moduli_are_irreducible(key):
    p, k = key
    F = get_field(p, k)
    assert gf_irreducible_p(_modulus(F), p, ZZ)


@pytest.mark.parametrize("p,k", FIELDS)
def test_generator_is_primitive(p, k):
    F = get_field(p, k)
    assert F.order_of(F.generator) == F.q - 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pk, data):
    F = get_field(*pk)
    el = st.integers(0, F.q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1


@pytest.mark.parametrize("p,k", FIELDS)
def test_square_roots_and_quadratic_character(p, k):
    F = get_field(p, k)
    squares = {F.mul(a, a) for a in range(F.q)}
    for a in range(F.q):
        r = F.sqrt(a)
        assert (r is not None) == (a in squares)
        if r is not None:
            assert F.mul(r, r) == a
        if p != 2:
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert F.quadratic_character(a) == expected


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4)])
def test_absolute_trace_is_sum_of_conjugates(p, k):
    F = get_field(p, k)
    for a in range(F.q):
        s, c = 0, a
        for _ in range(k):
            s = F.add(s, c)
            c = F.pow(c, p)
        assert s == F.absolute_trace(a)


@pytest.mark.parametrize("small,big", [((2, 1), (2, 4)), ((2, 2), (2, 4)), ((3, 1), (3, 2)),
                                       ((2, 2), (2, 6)), ((3, 2), (3, 4))])
def test_embedding_is_a_ring_homomorphism(small, big):
    K, L = get_field(*small), get_field(*big)
    emb = embedding(K, L)
    for a in range(K.q):
        assert L.pow(emb[a], K.q) == emb[a]
        for b in range(K.q):
            assert emb[K.mul(a, b)] == L.mul(emb[a], emb[b])
            assert emb[K.add(a, b)] == L.add(emb[a], emb[b])
    back = restriction(K, L)
    assert all(back[emb[a]] == a for a in range(K.q))


def test_prime_field_codes_are_residues():
    F = get_field(5, 1)
    assert [F.from_int(n) for n in range(7)] == [0, 1, 2, 3, 4, 0, 1]
    assert F.mul(3, 4) == 2


def test_is_prime_small_values():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_size_guard():
    with pytest.raises(ResourceLimitError):
        FiniteField(2, 21)


def test_custom_modulus_must_be_monic():
    with pytest.raises(ValueError):
        FiniteField(3, 2, (1, 0, 2))
