from collections import Counter

import pytest

from oracles import brute_point_count
from toroidal_ff.curves import (canonicalize, count_points, enumerate_places, hyperelliptic_curve,
                                infinite_place, places_of_degree, rational_curve)
from toroidal_ff.errors import ContractViolation, ResourceLimitError

CURVES = [
    ("ell_f2", (2, 1, [0, 0, 0, 1], [1])),
    ("ell_f3", (3, 1, [0, 2, 0, 1], [])),
    ("ell_f4", (2, 2, [0, 0, 0, 1], [1])),
    ("g2_f3", (3, 1, [1, 0, 0, 0, 0, 1], [])),
    ("g2_f2", (2, 1, [0, 0, 0, 1, 0, 1], [1])),
    ("ell_f5", (5, 1, [1, 1, 0, 1], [])),
    ("ell_f3_h", (3, 1, [1, 0, 0, 1], [0, 1])),
]


def test_counts_on_the_line():
    assert count_points(rational_curve(2), 1) == 3
    assert count_points(rational_curve(3), 2) == 10


def test_documented_counts():
    # enumeration of y^2 + y = x^3 over GF(2) and GF(4)
    assert count_points(hyperelliptic_curve(2, 1, [0, 0, 0, 1], [1]), 1) == 3
    assert count_points(hyperelliptic_curve(2, 2, [0, 0, 0, 1], [1]), 1) == 9


@pytest.mark.parametrize("name,args", CURVES)
def test_point_counts_match_enumeration(name, args):
    C = hyperelliptic_curve(*args)
    for n in range(1, 4):
        if C.q ** n > 200:
            break
        assert count_points(C, n) == brute_point_count(C, n)


@pytest.mark.parametrize("name,args", CURVES)
def test_place_counts_satisfy_divisor_sum(name, args):
    C = hyperelliptic_curve(*args)
    dmax = 1
    while C.q ** (dmax + 1) <= 2 ** 12 and dmax < 2 * C.genus + 2:
        dmax += 1
    counts = Counter(P.degree for P in enumerate_places(C, dmax))
    for n in range(1, dmax + 1):
        assert sum(d * counts[d] for d in range(1, n + 1) if n % d == 0) == count_points(C, n)


def test_documented_place_lists():
    P1 = rational_curve(2)
    counts = Counter(P.degree for P in enumerate_places(P1, 2))
    assert counts == {1: 3, 2: 1}
    E = hyperelliptic_curve(2, 1, [0, 0, 0, 1], [1])
    assert len(enumerate_places(E, 1)) == 3


@pytest.mark.parametrize("name,args", CURVES[:4])
def test_canonicalization_is_total_and_idempotent(name, args):
    C = hyperelliptic_curve(*args)
    for d in (1, 2, 3):
        if C.q ** d > 4096:
            break
        L, emb = C.lift_field(d)
        for P in places_of_degree(C, d):
            if P.is_infinite:
                continue
            assert canonicalize(C, P.representative, d) == P
            # every conjugate lands on the same place
            pt = P.representative
            for _ in range(d):
                pt = tuple(L.pow(c, C.q) for c in pt)
                assert canonicalize(C, pt, d) == P


def test_places_are_sorted_and_unique():
    C = hyperelliptic_curve(3, 1, [0, 2, 0, 1])
    places = enumerate_places(C, 3)
    assert places == sorted(places)
    assert len(set(places)) == len(places)
    assert infinite_place(C) in places
    for P in places:
        if not P.is_infinite:
            assert len(P.representative) == 2


def test_rational_point_on_the_line_is_first():
    P = enumerate_places(rational_curve(2), 1)[0]
    assert not P.is_infinite and P.representative == (0,)


def test_point_off_the_curve_is_rejected():
    C = hyperelliptic_curve(3, 1, [0, 2, 0, 1])
    with pytest.raises(ContractViolation):
        canonicalize(C, (1, 1), 1)


@pytest.mark.parametrize("f,h", [([0, 0, 0, 1], []), ([1, 0, 1], []), ([0, 0, 0, 1], [0, 0, 1])])
def test_invalid_models(f, h):
    with pytest.raises(ContractViolation):
        hyperelliptic_curve(3, 1, f, h)


def test_singular_char2_model_rejected():
    with pytest.raises(ContractViolation):
        hyperelliptic_curve(2, 1, [0, 0, 1, 0, 0, 1], [0, 1, 1])


def test_resource_guard():
    with pytest.raises(ResourceLimitError):
        count_points(rational_curve(3), 13)


def test_genus():
    assert hyperelliptic_curve(3, 1, [1, 0, 0, 0, 0, 1]).genus == 2
    assert rational_curve(5).genus == 0
