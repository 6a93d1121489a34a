"""Toroidal periods of Eisenstein series and their bookkeeping.

An Eisenstein series E(., chi) with unramified chi is toroidal exactly when
the normalized torus periods vanish.  For the split torus the period at the
identity is L(chi, 1/2)^2, for the torus of a quadratic extension with
character eta it is L(chi, 1/2) L(chi eta, 1/2); derivatives in s follow the
Leibniz rule.  Quadratic twists over the rational function field are
realised by the hyperelliptic curves y^2 = d(x).
"""

import cmath
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, log

from .characters import QuasiCharacter, UnramifiedCharacter, is_chi_squared_trivial, residual_sign
from .cyclotomic import Cyclo
from .errors import ContractViolation, TheoremViolation
from .gf import get_field
from .hecke import is_tempered
from .lfun import (LPolynomial, field_zeros, l_derivative, l_polynomial, l_value, zero_pairs)
from .poly import PolyRing, degree, trim

SPLIT = "split"
ROOT_TOL = 1e-7


def _as_quasi(chi):
    return QuasiCharacter(chi) if isinstance(chi, UnramifiedCharacter) else chi


def critical_point(field, chi):
    """T at which L(chi, 1/2) is evaluated: q^(-1/2 - s)."""
    chi = _as_quasi(chi)
    return cmath.exp(-(0.5 + chi.shift) * log(field.q))


def character_at_root(field, psi, tau):
    """The quasi-character psi |.|^s whose central point sits at the root tau."""
    q = field.q
    s = -cmath.log(tau) / log(q) - 0.5
    return QuasiCharacter(psi, s)


def raw_multiplicity(field, chi):
    chi = _as_quasi(chi)
    T0 = critical_point(field, chi)
    for tau, mult in field_zeros(field, chi.finite):
        if abs(tau - T0) < ROOT_TOL * max(1.0, abs(T0)):
            return mult
    return 0


def toroidal_order(field, chi):
    """Vanishing order n of the derivative family E^(0..n-1) that is toroidal.

    This is the multiplicity of q^(-1/2-s) as a root of L(omega, T), halved
    when chi^2 = 1 (such zeros come in even multiplicity and the family is
    indexed by even derivatives).
    """
    chi = _as_quasi(chi)
    if chi.finite.sign_twist:
        raise ContractViolation("toroidal_order expects delta = 0")
    if residual_sign(chi, field.q):
        raise ContractViolation("chi^2 = |.|^(+-1): use residue_toroidal")
    m = raw_multiplicity(field, chi)
    if is_chi_squared_trivial(chi, field.q):
        if m % 2:
            raise TheoremViolation("odd multiplicity at a self-dual point")
        return m // 2
    return m


@dataclass
class ToroidalCertificate:
    chi: QuasiCharacter
    tau: complex
    order: int
    multiplicity: int
    pair: object
    tempered: bool
    exact: bool


def toroidal_certificates(field):
    """One certificate per zero pair of a Pic^0 character."""
    out = []
    exact = field.q % 2 == 1
    for pair in zero_pairs(field):
        psi, tau = pair.first
        chi = character_at_root(field, psi, tau)
        rep = is_tempered(field, chi)
        out.append(ToroidalCertificate(chi, tau, pair.order, pair.multiplicity, pair,
                                       rep.tempered, exact))
    return out


@dataclass
class DimensionReport:
    dimension: int
    expected: int
    cover_degree: int
    cover_genus: int
    lower_bound_only: bool

    @property
    def ok(self):
        return self.dimension == self.expected


def toroidal_dimension(field, report=False):
    """Sum of zero-pair orders; must equal (g - 1) h + 1."""
    from .lfun import cover_zeta
    g, h = field.genus, field.class_number
    dim = sum(p.order for p in zero_pairs(field))
    expected = (g - 1) * h + 1
    if dim != expected:
        raise TheoremViolation(f"toroidal dimension {dim} differs from (g-1)h+1 = {expected}")
    if not report:
        return dim
    cz = cover_zeta(field)
    return DimensionReport(dim, expected, cz.degree, cz.degree // 2, field.q % 2 == 0)


def _guard_period(field, chi):
    if residual_sign(chi, field.q):
        raise ContractViolation("chi^2 = |.|^(+-1) is a residual point")


def _leibniz(f1, f2, n):
    return sum(comb(n, j) * f1(j) * f2(n - j) for j in range(n + 1))


def _deriv_fn(field, chi):
    def f(j):
        if j == 0:
            return l_value(field, chi, 0.5)
        return l_derivative(field, chi, 0.5, j)
    return f


def split_period(field, chi, n=0):
    """n-th s-derivative of L(chi, s + 1/2)^2 at s = 0."""
    chi = _as_quasi(chi)
    _guard_period(field, chi)
    f = _deriv_fn(field, chi)
    return _leibniz(f, f, n)


def nonsplit_period(field, chi, eta, n=0):
    """n-th s-derivative of L(chi, s + 1/2) L(chi eta, s + 1/2) at s = 0."""
    chi = _as_quasi(chi)
    if isinstance(eta, QuasiCharacter):
        eta = eta.finite
    if eta.is_trivial or not eta.is_quadratic:
        raise ContractViolation("eta must be a nontrivial quadratic character")
    _guard_period(field, chi)
    return _leibniz(_deriv_fn(field, chi), _deriv_fn(field, chi * eta), n)


def period_vanishing_order(period, field, chi, *args, max_order=12, tol=1e-9):
    """Least n with |period(field, chi, ..., n)| >= tol."""
    chi = _as_quasi(chi)
    for n in range(max_order + 1):
        if abs(period(field, chi, *args, n)) >= tol:
            return n
    return max_order + 1


# -- residues ------------------------------------------------------------------

def residue_toroidal(field, omega, selector=SPLIT):
    """Whether the residue of E at omega |.|^(1/2) is toroidal for the torus
    given by ``selector``: the string "split" or a quadratic character."""
    if isinstance(omega, QuasiCharacter):
        omega = omega.finite
    if not omega.is_quadratic:
        raise ContractViolation("residues only occur for omega^2 = 1")
    if selector == SPLIT:
        return True
    if selector.is_trivial or not selector.is_quadratic:
        raise ContractViolation("selector must be 'split' or a nontrivial quadratic character")
    if omega.is_trivial:
        return False
    return omega != selector


def residue_pole_order(field, omega, eta):
    """Pole order at the residual point of L(omega, .) L(omega eta, .).

    A nonzero order means the period of the residue is nonzero, so the
    residue is not toroidal for that torus.
    """
    return int(omega.is_trivial) + int((omega * eta).is_trivial)


@dataclass
class ResidueRow:
    omega: UnramifiedCharacter
    entries: dict
    has_failure: bool
    needs_ramified: bool


def residue_matrix(field):
    rows = []
    selectors = [SPLIT] + list(field.quadratic_characters)
    omegas = [field.trivial_character()] + list(field.quadratic_characters)
    for w in omegas:
        entries = {}
        for sel in selectors:
            key = SPLIT if sel == SPLIT else sel.label()
            entries[key] = residue_toroidal(field, w, sel)
        failure = not all(entries.values())
        rows.append(ResidueRow(w, entries, failure, not failure))
    return rows


# -- quadratic twists ------------------------------------------------------------

def _least_nonsquare(F):
    for a in range(1, F.q):
        if not F.is_square(a):
            return a
    raise ContractViolation("even characteristic has no non-squares")


def twist_point_count(F, d, n):
    """Points over GF(q^n) of the smooth projective model of y^2 = d(x)."""
    from .gf import embedding
    R = PolyRing(F)
    L = get_field(F.p, F.k * n)
    emb = embedding(F, L)
    total = 0
    for x in range(L.q):
        total += 1 + L.quadratic_character(R.eval(d, x, L, emb))
    if degree(d) % 2:
        total += 1
    else:
        total += 1 + L.quadratic_character(emb[d[-1]])
    return total


def rational_twist_l(F, d) -> LPolynomial:
    """Zeta numerator of y^2 = d(x) over F = GF(q), q odd, from point counts.

    This is the complete L-function L(chi_d, T) of the quadratic character
    of F(x)(sqrt d).
    """
    if F.p == 2:
        raise ContractViolation("rational twists need odd q")
    R = PolyRing(F)
    d = trim(d)
    if degree(d) < 1:
        raise ContractViolation("d must be nonconstant")
    if not R.is_squarefree(d):
        raise ContractViolation("d must be squarefree")
    q = F.q
    g = (degree(d) - 1) // 2
    a = [Fraction(twist_point_count(F, d, n) - 1 - q ** n, n) for n in range(1, g + 1)]
    p = [Fraction(1)]
    for n in range(1, g + 1):
        p.append(sum(k * a[k - 1] * p[n - k] for k in range(1, n + 1)) / n)
    p = [int(x) for x in p]
    full = p + [0] * g
    for i in range(g):
        full[2 * g - i] = q ** (g - i) * p[i]
    return LPolynomial([Cyclo.integer(1, c) for c in full], q, None, principal=False)


def twist_l_by_resultants(F, d):
    """Independent route: sum over monic f of chi(Res(f, d)) T^deg f, with the
    Euler factor at infinity removed."""
    R = PolyRing(F)
    d = trim(d)
    n = degree(d)
    fin = []
    for k in range(n):
        acc = 0
        for f in R.monic_polys(k):
            acc += F.quadratic_character(R.resultant(f, d))
        fin.append(acc)
    if n % 2:
        return fin
    e = F.quadratic_character(d[-1])
    # divide by (1 - e T)
    out = []
    carry = 0
    for c in fin:
        carry = c + e * carry
        out.append(carry)
    if out[-1] != 0:
        raise TheoremViolation("finite twist L-series is not divisible by the factor at infinity")
    return out[:-1]


def squarefree_candidates(F, max_degree, min_degree=1):
    """Squarefree d with leading coefficient 1 or the least non-square."""
    R = PolyRing(F)
    leads = [1, _least_nonsquare(F)]
    for n in range(min_degree, max_degree + 1):
        for lead in leads:
            for low in R.polys_below(n):
                d = trim(list(low) + [0] * (n - len(low)) + [lead])
                if R.is_squarefree(d):
                    yield d


@dataclass
class TwistWitness:
    base: QuasiCharacter
    witness: object
    value: complex
    kind: str
    verified: bool = True

    @property
    def magnitude(self):
        return abs(self.value)


@dataclass
class TwistSearchReport:
    base: QuasiCharacter
    witness: TwistWitness = None
    searched: list = dc_field(default_factory=list)
    skipped: list = dc_field(default_factory=list)

    @property
    def found(self):
        return self.witness is not None

    def note(self):
        if self.found:
            return "witness found"
        return ("no witness in the searched space; the non-vanishing theorem ranges over all "
                "quadratic extensions, so this is not a counterexample")


def twist_witness(field, omega, s0, max_degree=4, include_unramified=True, min_degree=1,
                  tol=1e-9, verify=True):
    """First quadratic twist with L(omega chi_E, s0) != 0 in canonical order."""
    if isinstance(omega, QuasiCharacter):
        omega = omega.finite
    s0 = complex(s0)
    base = QuasiCharacter(omega, s0 - 0.5)
    rep = TwistSearchReport(base)
    if include_unramified:
        for eta in field.quadratic_characters:
            v = l_value(field, omega * eta, s0)
            rep.searched.append(("unramified", eta.label()))
            if abs(v) > tol:
                rep.witness = TwistWitness(base, eta, v, "unramified")
                return rep
            rep.skipped.append(("unramified", eta.label(), v))
    if field.curve.is_rational and field.q % 2 == 1 and omega.is_trivial:
        F = field.curve.base
        T0 = cmath.exp(-s0 * log(field.q))
        for d in squarefree_candidates(F, max_degree, min_degree):
            lp = rational_twist_l(F, d)
            ok = True
            if verify:
                ok = lp.integer_coeffs() == twist_l_by_resultants(F, d)
                if not ok:
                    raise TheoremViolation(f"point-count and resultant twist L disagree for d={d}")
            v = lp.numerator(T0)
            rep.searched.append(("polynomial", list(d)))
            if abs(v) > tol:
                rep.witness = TwistWitness(base, tuple(d), v, "polynomial", ok)
                return rep
            rep.skipped.append(("polynomial", list(d), v))
    return rep
