import cmath
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from toroidal_ff import FunctionField
from toroidal_ff.characters import (QuasiCharacter, evaluate, is_chi_squared_trivial, rebase,
                                    residual_sign)


def test_documented_character_groups(p1_f2, ell_f2, ell_f3):
    assert len(p1_f2.characters) == 2
    assert p1_f2.characters[0].is_trivial and p1_f2.characters[1].sign_twist == 1
    assert len(ell_f2.characters) == 6
    omegas = ell_f2.pic_characters
    assert sorted(w.order() for w in omegas) == [1, 3, 3]
    assert all(w.is_quadratic for w in ell_f3.pic_characters)


def test_quadratic_characters(p1_f3, ell_f2, ell_f3):
    assert [c.label() for c in p1_f3.quadratic_characters] == ["()*sgn"]
    assert len(ell_f2.quadratic_characters) == 1 and ell_f2.quadratic_characters[0].sign_twist
    assert len(ell_f3.quadratic_characters) == 7


def test_group_structure(all_fields):
    for F in all_fields:
        chars = F.characters
        assert len(set(chars)) == 2 * F.class_number
        assert chars[0].is_trivial
        pic = set(F.pic_characters)
        for a in F.pic_characters:
            assert a.inverse() in pic
            assert (a * a.inverse()).is_trivial
            for b in F.pic_characters:
                assert a * b in pic


def test_trivial_and_norm_values(ell_f3):
    F = ell_f3
    s = complex(0.3, 0.7)
    for P in F.places(2):
        assert evaluate(F, F.trivial_character(), P) == 1
        v = evaluate(F, QuasiCharacter(F.trivial_character(), s), P)
        assert abs(v - F.q ** (-s * P.degree)) < 1e-12
    deg2 = F.places_of_degree(2)[0]
    assert evaluate(F, F.trivial_character(1), deg2) == 1


@pytest.mark.parametrize("idx", range(6))
def test_multiplicativity_and_sign_rule(all_fields, idx):
    F = all_fields[idx]
    rng = random.Random(idx)
    for _ in range(15):
        a = QuasiCharacter(rng.choice(F.characters), complex(rng.uniform(-1, 1), rng.uniform(-3, 3)))
        b = QuasiCharacter(rng.choice(F.characters), complex(rng.uniform(-1, 1), rng.uniform(-3, 3)))
        for x in F.places(2):
            lhs = evaluate(F, a * b, x)
            assert abs(lhs - evaluate(F, a, x) * evaluate(F, b, x)) < 1e-12
            tw = QuasiCharacter(a.finite.twist(), a.shift)
            assert abs(evaluate(F, tw, x) - (-1) ** x.degree * evaluate(F, a, x)) < 1e-12
            re = -math.log(abs(evaluate(F, a, x))) / (x.degree * math.log(F.q))
            assert abs(re - a.real_part) < 1e-9


def test_finite_values_are_roots_of_unity(g2_f3):
    F = g2_f3
    for psi in F.characters:
        for x in F.places(2):
            v = evaluate(F, psi, x)
            assert abs(abs(v) - 1) < 1e-12
            assert abs(v ** (2 * psi.modulus) - 1) < 1e-9


def test_independent_of_degree_one_base(ell_f3, g2_f3):
    for F in (ell_f3, g2_f3):
        for base in F.places_of_degree(1):
            G = FunctionField(F.curve, base=base)
            for psi in F.characters:
                chi = QuasiCharacter(psi, 0.25j)
                chi2 = rebase(chi, F, G)
                for x in F.places(2):
                    assert abs(evaluate(F, chi, x) - evaluate(G, chi2, x)) < 1e-9


def test_sign_twist_equals_norm_at_i_pi(ell_f2):
    F = ell_f2
    s = 1j * math.pi / math.log(F.q)
    for x in F.places(3):
        a = evaluate(F, QuasiCharacter(F.trivial_character(), s), x)
        b = evaluate(F, F.trivial_character(1), x)
        assert abs(a - b) < 1e-12


def test_square_and_residual_classification(ell_f3):
    q = ell_f3.q
    lq = math.log(q)
    eta = ell_f3.pic_characters[1]
    assert is_chi_squared_trivial(QuasiCharacter(eta, 0), q)
    assert is_chi_squared_trivial(QuasiCharacter(eta, 1j * math.pi / lq), q)
    assert not is_chi_squared_trivial(QuasiCharacter(eta, 0.1j), q)
    assert residual_sign(QuasiCharacter(eta, 0.5), q) != 0
    assert residual_sign(QuasiCharacter(eta, -0.5), q) != 0
    assert residual_sign(QuasiCharacter(eta, 0.2), q) == 0


@settings(max_examples=60, deadline=None)
@given(st.floats(-2, 2), st.floats(-5, 5), st.integers(0, 5))
def test_inverse_and_square(re, im, k):
    F = FunctionField.hyperelliptic(2, 1, [0, 0, 0, 1], [1])
    chi = QuasiCharacter(F.characters[k], complex(re, im))
    for x in F.places(2):
        assert abs(evaluate(F, chi, x) * evaluate(F, chi.inverse(), x) - 1) < 1e-9 * max(
            1, abs(evaluate(F, chi, x)) ** 2)
        assert abs(evaluate(F, chi.square(), x) - evaluate(F, chi, x) ** 2) < 1e-9 * max(
            1, abs(evaluate(F, chi, x)) ** 2)
