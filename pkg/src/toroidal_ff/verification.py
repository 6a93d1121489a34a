"""Executable invariant suites and acceptance criteria.

Each check returns a ``Check`` with a name, a pass flag and a short detail
string.  ``invariant_suite`` runs the per-module properties on one field;
``criterion(k)`` runs acceptance criterion k on the standard test curves.
"""

import cmath
import math
import random
import time
from dataclasses import dataclass
from itertools import combinations

import mpmath

from .characters import QuasiCharacter, evaluate, finite_value, is_chi_squared_trivial, rebase
from .cyclotomic import Cyclo
from .errors import PoleError, ToroidalError
from .function_field import FunctionField
from .hecke import (EISENSTEIN, commutator_norm, full_jordan_matrix, hecke_lambda, is_tempered,
                    lambda_minus_vanishes, relation_is_invariant)
from .lfun import (cover_zeta, epsilon_factor, euler_truncation, field_zeros,
                   functional_equation_residual, l_polynomial, zero_pairs, zeta_numerator)
from .picard import canonical_class
from .toroidal import (SPLIT, nonsplit_period, raw_multiplicity, residue_matrix, split_period,
                       toroidal_certificates, toroidal_dimension, twist_witness)

STANDARD_CURVES = (
    ("P1/F2", dict(p=2, k=1, model="rational")),
    ("P1/F3", dict(p=3, k=1, model="rational")),
    ("y^2+y=x^3/F2", dict(p=2, k=1, model="hyperelliptic", f=[0, 0, 0, 1], h=[1])),
    ("y^2=x^3-x/F3", dict(p=3, k=1, model="hyperelliptic", f=[0, 2, 0, 1], h=[])),
    ("y^2+y=x^3/F4", dict(p=2, k=2, model="hyperelliptic", f=[0, 0, 0, 1], h=[1])),
    ("y^2=x^5+1/F3", dict(p=3, k=1, model="hyperelliptic", f=[1, 0, 0, 0, 0, 1], h=[])),
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def standard_fields():
    from .spec_io import parse_spec
    return [(name, FunctionField(parse_spec(spec))) for name, spec in STANDARD_CURVES]


def _guarded(name, fn):
    try:
        ok, detail = fn()
    except ToroidalError as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, bool(ok), detail)


# -- sampling helpers ------------------------------------------------------------

def fe_sample_points(q, count=20, seed=0):
    rng = random.Random(seed)
    bound = 2 * math.pi / math.log(q)
    return [complex(rng.uniform(-1.0, 1.0), rng.uniform(-bound, bound)) for _ in range(count)]


def tested_characters(field):
    """Characters used by the Hecke checks: every (omega, delta) at a few
    shifts, including the self-dual shifts 0 and i pi / ln q."""
    lq = math.log(field.q)
    shifts = [0j, 1j * math.pi / lq, complex(0.1, 0.3), complex(0, 0.7)]
    out = [QuasiCharacter(psi, s) for psi in field.characters for s in shifts]
    out += [c.chi for c in toroidal_certificates(field)]
    return out


def _closed_form_square(field, chi, dps=30):
    """s -> L(chi, s + 1/2)^2 evaluated directly from the coefficients."""
    lp = l_polynomial(field, chi.finite)

    def f(s):
        with mpmath.workdps(dps):
            T = mpmath.power(field.q, -(s + mpmath.mpf(1) / 2 + mpmath.mpc(chi.shift)))
            num = sum(c.to_mpc() * T ** d for d, c in enumerate(lp.coeffs))
            if lp.principal:
                e = lp.sign
                num = num / ((1 - e * T) * (1 - e * field.q * T))
            return num * num
    return f


def finite_difference(f, n, h=1e-5, dps=30):
    with mpmath.workdps(dps):
        h = mpmath.mpf(h)
        if n == 1:
            return complex((f(h) - f(-h)) / (2 * h))
        if n == 2:
            return complex((f(h) - 2 * f(mpmath.mpf(0)) + f(-h)) / (h * h))
        if n == 3:
            return complex((f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (2 * h ** 3))
    raise ValueError("finite differences implemented for n <= 3")


# -- acceptance criteria ---------------------------------------------------------

def criterion_1(fields=None):
    start = time.perf_counter()
    fields = fields or standard_fields()
    details, ok = [], True
    for name, F in fields:
        h_independent = sum(zeta_numerator(F))
        h_table = F.class_number
        dim = toroidal_dimension(F)
        expected = (F.genus - 1) * h_independent + 1
        good = dim == expected and h_table == h_independent
        ok &= good
        details.append(f"{name}: g={F.genus} h={h_independent} dim={dim}")
    elapsed = time.perf_counter() - start
    ok &= elapsed < 60
    return ok, "; ".join(details) + f"; {elapsed:.1f}s"


def criterion_2(fields=None):
    fields = fields or standard_fields()
    worst, count = 0.0, 0
    for name, F in fields:
        n = max(2 * F.genus, 2)
        for psi in F.characters:
            a = l_polynomial(F, psi).series(n)
            b = euler_truncation(F, psi, n)
            count += 1
            lp = l_polynomial(F, psi)
            if lp.rational_coeffs() is not None:
                if any(x != y for x, y in zip(a, b)):
                    return False, f"{name} {psi.label()}: exact mismatch"
            else:
                worst = max(worst, max(abs(complex(x) - complex(y)) for x, y in zip(a, b)))
                if any(x != y for x, y in zip(a, b)):
                    return False, f"{name} {psi.label()}: cyclotomic mismatch"
    return worst < 1e-10, f"{count} characters, numeric max deviation {worst:.1e}"


def criterion_3(fields=None, tol=1e-9):
    fields = fields or standard_fields()
    worst, count = 0.0, 0
    rng = random.Random(7)
    for name, F in fields:
        K_cls, K_deg = F.canonical
        if K_deg != 2 * F.genus - 2:
            return False, f"{name}: canonical degree {K_deg}"
        for psi in F.characters:
            chi = QuasiCharacter(psi, complex(rng.uniform(-0.3, 0.3), rng.uniform(-1, 1)))
            for s in fe_sample_points(F.q, 20, seed=count):
                try:
                    r = functional_equation_residual(F, chi, s)
                except PoleError:
                    continue
                worst = max(worst, r)
                # closed form of the root number
                eps = epsilon_factor(F, chi, s)
                w = complex(psi.omega.value(F.canonical_log))
                closed = w * F.q ** (-(2 * F.genus - 2) * (s + chi.shift))
                if abs(eps - closed) > 1e-12 * max(1, abs(closed)):
                    return False, f"{name}: epsilon closed form mismatch"
            count += 1
    return worst < tol, f"{count} characters x 20 points, max residual {worst:.1e}"


def criterion_4(fields=None, tol=1e-9):
    fields = fields or standard_fields()
    worst, n = 0.0, 0
    for name, F in fields:
        r = F.q ** -0.5
        for psi in F.characters:
            for tau, _ in field_zeros(F, psi):
                worst = max(worst, abs(abs(tau) - r))
                n += 1
    return worst < tol, f"{n} roots, max | |tau| - q^-1/2 | = {worst:.1e}"


def criterion_5(fields=None):
    fields = fields or standard_fields()
    ok, details = True, []
    for name, F in fields:
        r = F.q ** -0.5
        for psi in F.characters:
            if not psi.is_quadratic:
                continue
            for tau, m in field_zeros(F, psi):
                if min(abs(tau - r), abs(tau + r)) < 1e-9:
                    details.append(f"{name} {psi.label()} tau={tau.real:+.4f} mult={m}")
                    ok &= m % 2 == 0
        if F.curve.q == 4 and F.genus == 1:
            m = dict((round(t.real, 9), mm) for t, mm in field_zeros(F, F.trivial_character()))
            ok &= m.get(-0.5) == 2
    return ok, "; ".join(details)


def criterion_6(fields=None, tol=1e-6):
    fields = fields or standard_fields()
    details = []
    for name, F in fields:
        cz = cover_zeta(F, tol)
        coeffs = cz.integer_coeffs()
        expected = 2 * ((F.genus - 1) * F.class_number + 1)
        if cz.degree != expected or coeffs is None:
            return False, f"{name}: degree {cz.degree} expected {expected}"
        details.append(f"{name}: deg {cz.degree}, L(1)={sum(coeffs)}")
    return True, "; ".join(details)


def criterion_7(fields=None, tol=1e-10):
    fields = fields or standard_fields()
    tested, worst = 0, 0.0
    for name, F in fields:
        places = F.places(3)
        for chi in tested_characters(F):
            sq = is_chi_squared_trivial(chi, F.q)
            if lambda_minus_vanishes(F, chi, 4) != sq:
                return False, f"{name} {chi}: lambda^- vanishing disagrees with chi^2 = 1"
            for n in (2, 3, 4):
                mats = [full_jordan_matrix(F, chi, x, n) for x in places]
                for A, B in combinations(mats, 2):
                    c = commutator_norm(A.matrix, B.matrix)
                    scale = max(1.0, float(abs(A.matrix).max() * abs(B.matrix).max()))
                    worst = max(worst, c / scale)
                for A in mats:
                    lm = hecke_lambda(F, chi, A.place, 1)
                    single = A.minimal_polynomial_degree() == n
                    if single != (abs(lm) > 1e-9):
                        return False, f"{name} {chi} at {A.place}: single-block criterion"
            tested += 1
    return worst < tol, f"{tested} characters, max relative commutator {worst:.1e}"


def criterion_8(fields=None, tol=1e-9):
    fields = fields or standard_fields()
    n_cert, n_win = 0, 0
    for name, F in fields:
        for cert in toroidal_certificates(F):
            rep = is_tempered(F, cert.chi, 3, tol)
            if not rep.tempered or not all(ok for _, _, ok in rep.windows):
                return False, f"{name}: certificate {cert.chi} outside the window"
            n_cert += 1
            n_win += len(rep.windows)
    return True, f"{n_cert} certificates, {n_win} place windows"


def criterion_9(fields=None, tol=1e-9, rel=1e-6):
    fields = fields or standard_fields()
    worst_fd, checked = 0.0, 0
    for name, F in fields:
        lq = math.log(F.q)
        generic = [QuasiCharacter(psi, complex(0.13, 0.41)) for psi in F.pic_characters]
        certs = toroidal_certificates(F)
        for chi in generic + [c.chi for c in certs]:
            f = _closed_form_square(F, chi)
            for n in (1, 2):
                a = split_period(F, chi, n)
                b = finite_difference(f, n)
                dev = abs(a - b) / max(1.0, abs(b))
                worst_fd = max(worst_fd, dev)
        for cert in certs:
            chi = cert.chi
            m = raw_multiplicity(F, chi)
            orders = [(split_period, (), 2 * m)]
            for eta in F.quadratic_characters:
                m_eta = raw_multiplicity(F, chi * eta)
                orders.append((nonsplit_period, (eta,), m + m_eta))
            for period, args, n in orders:
                for j in range(n):
                    v = period(F, chi, *args, j)
                    if abs(v) >= tol:
                        return False, f"{name}: period of order {j} < {n} is {abs(v):.2e}"
                if abs(period(F, chi, *args, n)) < tol:
                    return False, f"{name}: period of order {n} vanishes"
                checked += 1
    return worst_fd < rel, f"{checked} vanishing profiles, finite-difference deviation {worst_fd:.1e}"


def critical_line_samples(q, count=10):
    """Im parts on the critical line; the first is the zero of 1 + 3T^2 when q = 3."""
    lq = math.log(q)
    base = [math.pi / (2 * lq)]
    base += [0.3 + 0.37 * k for k in range(count - 1)]
    return base[:count]


def criterion_10(max_degree=4):
    from .spec_io import parse_spec
    F = FunctionField(parse_spec(dict(p=3, k=1, model="rational")))
    omega = F.trivial_character()
    found, details = 0, []
    samples = critical_line_samples(3, 10)
    for t in samples:
        rep = twist_witness(F, omega, complex(0.5, t), max_degree=max_degree,
                            include_unramified=False, min_degree=3)
        if rep.found and rep.witness.verified and rep.witness.magnitude > 1e-9:
            found += 1
            details.append(f"t={t:.3f}: d={list(rep.witness.witness)} after {len(rep.skipped)} skips")
    return found == len(samples), f"{found}/{len(samples)} witnesses; " + "; ".join(details[:3])


CRITERIA = {
    1: ("dimension theorem", criterion_1),
    2: ("oracle equivalence", criterion_2),
    3: ("functional equation", criterion_3),
    4: ("RH modulus", criterion_4),
    5: ("even multiplicity", criterion_5),
    6: ("cover identity", criterion_6),
    7: ("Hecke structure", criterion_7),
    8: ("temperedness", criterion_8),
    9: ("period derivatives", criterion_9),
    10: ("twist non-vanishing", criterion_10),
}


def criterion(k):
    name, fn = CRITERIA[k]
    return _guarded(f"criterion {k} ({name})", fn)


# -- per-field invariant suite ------------------------------------------------------

def invariant_suite(field, tol=1e-9, samples=200, seed=1):
    """Every module's properties, run on one field."""
    F = field
    curve = F.curve
    rng = random.Random(seed)
    checks = []

    def add(name, fn):
        checks.append(_guarded(name, fn))

    add("field_curve.nonsingular", lambda: (curve.is_nonsingular(), repr(curve)))
    if not checks[-1].passed:
        return checks

    def field_axioms():
        K = curve.base
        for _ in range(samples):
            a, b, c = (rng.randrange(K.q) for _ in range(3))
            if K.mul(K.mul(a, b), c) != K.mul(a, K.mul(b, c)):
                return False, "multiplication not associative"
            if K.add(K.add(a, b), c) != K.add(a, K.add(b, c)):
                return False, "addition not associative"
            if K.mul(a, K.add(b, c)) != K.add(K.mul(a, b), K.mul(a, c)):
                return False, "distributivity fails"
        inv_ok = all(K.mul(a, K.inv(a)) == 1 for a in range(1, K.q))
        return inv_ok, f"{samples} triples over {K!r}"
    add("field_curve.field_axioms", field_axioms)

    dmax = max(2 * F.genus + 2, 2)
    dmax = min(dmax, max(1, int(math.log(2 ** 14) / math.log(F.q))))

    def place_counts():
        from collections import Counter
        counts = Counter(P.degree for P in F.places(dmax))
        for n in range(1, dmax + 1):
            s = sum(d * counts[d] for d in range(1, n + 1) if n % d == 0)
            if s != F.point_count(n):
                return False, f"n={n}: {s} != N_n={F.point_count(n)}"
        return True, f"degrees <= {dmax}"
    add("field_curve.place_counts", place_counts)

    def canonicalization():
        from .curves import canonicalize
        for P in F.places(min(dmax, 3)):
            if P.is_infinite:
                continue
            if canonicalize(curve, P.representative, P.degree) != P:
                return False, f"{P} not a fixed point"
        return True, "idempotent on all places of degree <= 3"
    add("field_curve.canonicalization", canonicalization)

    T = F.table

    def class_number():
        h = sum(zeta_numerator(F))
        return h == T.order, f"#Pic0 = {T.order}, L(1) = {h}"
    add("picard.class_number", class_number)

    def group_law():
        els = T.elements
        for _ in range(min(500, max(1, len(els) ** 3))):
            a, b, c = (rng.choice(els) for _ in range(3))
            if T.add(T.add(a, b), c) != T.add(a, T.add(b, c)) or T.add(a, b) != T.add(b, a):
                return False, "Cantor law fails on a sample"
        for a in els:
            if T.order % T.element_order(a):
                return False, f"order of {a} does not divide h"
        return True, "associative, commutative, orders divide h"
    add("picard.group_law", group_law)

    def log_iso():
        if T.order > 64:
            return True, "skipped (h > 64)"
        for a in T.elements:
            for b in T.elements:
                if T.log(T.add(a, b)) != T.add_logs(T.log(a), T.log(b)):
                    return False, "log is not additive"
        prod = 1
        for d in T.invariants:
            prod *= d
        return prod == T.order, f"invariants {T.invariants}"
    add("picard.log_isomorphism", log_iso)

    def canonical_square():
        K = canonical_class(curve)[0]
        return any(T.add(a, a) == K for a in T.elements), "canonical class is a square"
    add("picard.canonical_square", canonical_square)

    def char_group():
        chars = F.characters
        ok = len(set(chars)) == 2 * T.order and chars[0].is_trivial
        omegas = set(F.pic_characters)
        for a in F.pic_characters:
            ok &= a.inverse() in omegas
            for b in F.pic_characters:
                ok &= (a * b) in omegas
        return ok, f"{len(chars)} characters"
    add("characters.group", char_group)

    def multiplicativity():
        places = F.places(2)
        worst = 0.0
        for _ in range(20):
            a = QuasiCharacter(rng.choice(F.characters), complex(rng.uniform(-1, 1), rng.uniform(-2, 2)))
            b = QuasiCharacter(rng.choice(F.characters), complex(rng.uniform(-1, 1), rng.uniform(-2, 2)))
            for x in places:
                worst = max(worst, abs(evaluate(F, a * b, x) - evaluate(F, a, x) * evaluate(F, b, x)))
                sgn = evaluate(F, a.finite.twist(), x) / evaluate(F, a.finite, x)
                if abs(sgn - (-1) ** x.degree) > 1e-12:
                    return False, "sign twist rule fails"
                re = -math.log(abs(evaluate(F, a, x))) / (x.degree * math.log(F.q))
                if abs(re - a.real_part) > 1e-9:
                    return False, "real part not recovered"
        return worst < 1e-12, f"max deviation {worst:.1e}"
    add("characters.multiplicativity", multiplicativity)

    def base_change():
        deg1 = [P for P in F.places_of_degree(1) if P != F.base]
        if not deg1:
            return True, "single rational place"
        G = FunctionField(curve, base=deg1[0])
        worst = 0.0
        for psi in F.characters:
            chi = QuasiCharacter(psi, 0.2j)
            chi2 = rebase(chi, F, G)
            for x in F.places(2):
                worst = max(worst, abs(evaluate(F, chi, x) - evaluate(G, chi2, x)))
        return worst < 1e-9, f"rebased to {deg1[0]}, max deviation {worst:.1e}"
    add("characters.base_change", base_change)

    def oracle():
        n = max(2 * F.genus, 2)
        for psi in F.characters:
            if any(x != y for x, y in zip(l_polynomial(F, psi).series(n), euler_truncation(F, psi, n))):
                return False, f"{psi.label()} differs"
        return True, f"through degree {n}"
    add("lfun.oracle_equivalence", oracle)

    def fe():
        worst = 0.0
        for psi in F.characters:
            for s in fe_sample_points(F.q, 20, seed=seed):
                try:
                    worst = max(worst, functional_equation_residual(F, QuasiCharacter(psi), s))
                except PoleError:
                    pass
        return worst < tol, f"max residual {worst:.1e}"
    add("lfun.functional_equation", fe)

    def rh():
        worst = max([abs(abs(t) - F.q ** -0.5) for psi in F.characters for t, _ in field_zeros(F, psi)]
                    or [0.0])
        return worst < tol, f"max deviation {worst:.1e}"
    add("lfun.riemann_hypothesis", rh)

    def even_mult():
        r = F.q ** -0.5
        for psi in F.characters:
            if psi.is_quadratic:
                for t, m in field_zeros(F, psi):
                    if min(abs(t - r), abs(t + r)) < 1e-9 and m % 2:
                        return False, f"{psi.label()} has odd multiplicity at {t}"
        return True, "all self-dual zeros have even multiplicity"
    add("lfun.even_multiplicity", even_mult)

    def symmetry():
        a = zeta_numerator(F)
        g, q = F.genus, F.q
        return all(a[2 * g - i] == q ** (g - i) * a[i] for i in range(g + 1)), f"numerator {a}"
    add("lfun.numerator_symmetry", symmetry)

    def pairs():
        total = sum(p.order for p in zero_pairs(F))
        pairs_all = zero_pairs(F, include_sign_twists=True)
        return total == (F.genus - 1) * T.order + 1, f"sum of orders {total}; {len(pairs_all)} pairs with sign twists"
    add("lfun.zero_pairs", pairs)

    def cover():
        cz = cover_zeta(F)
        return True, f"degree {cz.degree}"
    add("lfun.cover_zeta", cover)

    def hecke_checks():
        places = F.places(3)
        for chi in tested_characters(F):
            sq = is_chi_squared_trivial(chi, F.q)
            if lambda_minus_vanishes(F, chi, 3 if F.q ** 4 > 4096 else 4) != sq:
                return False, f"lambda^- criterion fails for {chi}"
            for x in places[:6]:
                if relation_is_invariant(F, chi, x) != (abs(hecke_lambda(F, chi, x, 1)) < 1e-9):
                    return False, "relation compatibility fails"
            mats = [full_jordan_matrix(F, chi, x, 3).matrix for x in places]
            for A, B in combinations(mats, 2):
                if commutator_norm(A, B) > 1e-10 * max(1.0, abs(A).max() * abs(B).max()):
                    return False, "Hecke matrices do not commute"
            is_tempered(F, chi, 3, tol)
        return True, "commutativity, single-block, relation, windows"
    add("hecke.structure", hecke_checks)

    def dimension():
        rep = toroidal_dimension(F, report=True)
        mode = "lower bound" if rep.lower_bound_only else "exact"
        return rep.ok and rep.cover_degree == 2 * rep.dimension, f"dim {rep.dimension} ({mode})"
    add("toroidal.dimension", dimension)

    def certificates():
        certs = toroidal_certificates(F)
        return all(c.tempered and c.order >= 1 for c in certs), f"{len(certs)} certificates, all tempered"
    add("toroidal.certificates", certificates)

    def leibniz():
        worst = 0.0
        for psi in F.pic_characters:
            chi = QuasiCharacter(psi, complex(0.11, 0.37))
            f = _closed_form_square(F, chi)
            for n in (1, 2, 3):
                a = split_period(F, chi, n)
                b = finite_difference(f, n, h=1e-4 if n == 3 else 1e-5)
                worst = max(worst, abs(a - b) / max(1.0, abs(b)))
        return worst < 1e-6, f"max relative deviation {worst:.1e}"
    add("toroidal.leibniz", leibniz)

    def residues():
        rows = residue_matrix(F)
        return all(r.has_failure for r in rows), f"{len(rows)} residual characters, each fails some torus"
    add("toroidal.residue_totality", residues)

    return checks
