"""L-functions of unramified characters in the variable T = q^(-s).

Three routes to the coefficients are provided and cross-checked in tests:
the zeta numerator rebuilt from point counts (trivial character), a sum over
effective divisors organised by semi-reduced Mumford pairs, and a truncated
Euler product over enumerated places.
"""

import cmath
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, log

import mpmath

from .characters import QuasiCharacter, UnramifiedCharacter, finite_value
from .cyclotomic import Cyclo, convolve
from .errors import ContractViolation, PoleError, PrecisionError, TheoremViolation
from .qpoly import qeval, squarefree_decomposition

CLUSTER_RADIUS = 1e-8
POLE_TOL = 1e-12


class LPolynomial:
    """Numerator of L(psi, T), with the pole factor for principal psi.

    For principal psi = sgn^delta the full L-function is
    N(T) / ((1 - e T)(1 - e q T)) with e = (-1)^delta; otherwise it is the
    polynomial N(T) itself.
    """

    def __init__(self, coeffs, q, character=None, principal=False):
        self.coeffs = list(coeffs)
        self.q = q
        self.character = character
        self.principal = principal

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def sign(self):
        return -1 if self.character is not None and self.character.sign_twist else 1

    @property
    def is_exact(self):
        return all(isinstance(c, Cyclo) for c in self.coeffs)

    def complex_coeffs(self):
        return [complex(c) for c in self.coeffs]

    def rational_coeffs(self):
        """Coefficients as Fractions when they all lie in Q, else None."""
        out = []
        for c in self.coeffs:
            if isinstance(c, Cyclo):
                r = c.rational_value()
            elif isinstance(c, (int, Fraction)):
                r = Fraction(c)
            else:
                r = None
            if r is None:
                return None
            out.append(r)
        return out

    def integer_coeffs(self):
        r = self.rational_coeffs()
        if r is None or any(x.denominator != 1 for x in r):
            return None
        return [int(x) for x in r]

    def numerator(self, T):
        acc = 0j
        for c in reversed(self.complex_coeffs()):
            acc = acc * T + c
        return acc

    def denominator(self, T):
        if not self.principal:
            return 1
        e = self.sign
        return (1 - e * T) * (1 - e * self.q * T)

    def poles(self):
        if not self.principal:
            return []
        e = self.sign
        return [complex(e), complex(e / self.q)]

    def _check_pole(self, T):
        for p in self.poles():
            if abs(T - p) < POLE_TOL * max(1.0, abs(p)):
                raise PoleError(f"L-function has a pole at T={p}", order=1)

    def __call__(self, T):
        T = complex(T)
        self._check_pole(T)
        return self.numerator(T) / self.denominator(T)

    def theta(self, T, j):
        """(T d/dT)^j of the full L-function at T."""
        T = complex(T)
        self._check_pole(T)
        cc = self.complex_coeffs()

        def theta_num(i):
            return sum((d ** i) * c * T ** d for d, c in enumerate(cc))

        if not self.principal:
            return theta_num(j)
        e, q = self.sign, self.q

        def theta_den(i):
            if i == 0:
                return 1 - e * (1 + q) * T + q * T * T
            return -e * (1 + q) * T + (2 ** i) * q * T * T

        den = theta_den(0)
        vals = []
        for k in range(j + 1):
            acc = theta_num(k)
            for i in range(k):
                acc -= comb(k, i) * vals[i] * theta_den(k - i)
            vals.append(acc / den)
        return vals[j]

    def series(self, n):
        """Power series coefficients of the full L-function through T^n."""
        num = list(self.coeffs) + [0 * self.coeffs[0]] * max(0, n + 1 - len(self.coeffs))
        num = num[:n + 1]
        if not self.principal:
            return num
        e, q = self.sign, self.q
        # 1/((1 - eT)(1 - eqT)) = sum_k e^k (q^{k+1} - 1)/(q - 1) T^k
        inv = [(e ** k) * (q ** (k + 1) - 1) // (q - 1) for k in range(n + 1)]
        return [sum((num[i] * inv[k - i] for i in range(k + 1)), 0 * num[0]) for k in range(n + 1)]

    def twisted(self):
        """The T -> -T twist, i.e. multiplication of the character by sgn."""
        ch = self.character.twist() if self.character is not None else None
        return LPolynomial([c if d % 2 == 0 else -c for d, c in enumerate(self.coeffs)],
                           self.q, ch, self.principal)

    def __repr__(self):
        r = self.rational_coeffs()
        shown = [str(x) for x in r] if r is not None else [f"{complex(c):.6g}" for c in self.coeffs]
        tag = f" for {self.character.label()}" if self.character is not None else ""
        return f"LPolynomial[{', '.join(shown)}]{tag}"


def _cache(field, name):
    d = field.__dict__.setdefault("_lfun_cache", {})
    return d.setdefault(name, {})


def zeta_numerator(field):
    """Integer coefficients of the zeta numerator from N_1..N_g."""
    c = _cache(field, "zeta")
    if "num" in c:
        return c["num"]
    g, q = field.genus, field.q
    a = [Fraction(field.point_count(n) - 1 - q ** n, n) for n in range(1, g + 1)]
    p = [Fraction(1)]
    for n in range(1, g + 1):
        p.append(sum(k * a[k - 1] * p[n - k] for k in range(1, n + 1)) / n)
    for x in p:
        if x.denominator != 1:
            raise TheoremViolation("zeta numerator has non-integral coefficients")
    p = [int(x) for x in p]
    full = p + [0] * g
    for i in range(g):
        full[2 * g - i] = q ** (g - i) * p[i]
    c["num"] = full
    return full


def semireduced_class_counts(field, m):
    """Counter of discrete logs of [D - m oo] over semi-reduced pairs of degree m."""
    c = _cache(field, "semi")
    if m not in c:
        if field.curve.is_rational:
            c[m] = Counter({(): 1}) if m == 0 else Counter()
        else:
            law, t = field.law, field.table
            cnt = Counter()
            for u, v in law.semireduced_pairs(m):
                cnt[t.log(law.reduce(u, v))] += 1
            c[m] = cnt
    return c[m]


def divisor_sum_coefficients(field, psi: UnramifiedCharacter, d_max):
    """c_d = sum over effective D of degree d of omega([D - d A1]), d <= d_max.

    Effective divisors are split as (semi-reduced part) + (pullback of an
    effective divisor of the x-line) + (multiple of oo); the middle part has
    trivial class and contributes q^j choices in degree 2j.
    """
    omega = psi.omega
    m = omega.modulus
    q = field.q
    t = field.table
    S = []
    for e in range(d_max + 1):
        acc = Cyclo(m)
        for x, n in semireduced_class_counts(field, e).items():
            acc = acc + omega.value(x) * n
        S.append(acc)
    out = []
    for d in range(d_max + 1):
        acc = Cyclo(m)
        for e in range(d + 1):
            for j in range(e // 2 + 1):
                acc = acc + S[e - 2 * j] * (q ** j)
        rot = omega.value(t.scale_log(-d, field.base_log))
        val = acc * rot
        if psi.sign_twist and d % 2:
            val = -val
        out.append(val)
    return out


def l_polynomial(field, psi: UnramifiedCharacter) -> LPolynomial:
    """L-polynomial of (omega, delta); delta enters through T -> -T."""
    if isinstance(psi, QuasiCharacter):
        psi = psi.finite
    c = _cache(field, "lpoly")
    if psi in c:
        return c[psi]
    m = psi.modulus
    g = field.genus
    if psi.is_omega_trivial:
        coeffs = [Cyclo.integer(m, a) for a in zeta_numerator(field)]
        lp = LPolynomial(coeffs, field.q, psi.omega, principal=True)
    else:
        if g == 0:
            raise ContractViolation("the rational function field has no nontrivial omega")
        coeffs = divisor_sum_coefficients(field, psi.omega, 2 * g - 2)
        lp = LPolynomial(coeffs, field.q, psi.omega, principal=False)
    if psi.sign_twist:
        lp = lp.twisted()
    c[psi] = lp
    return lp


def euler_truncation(field, chi, d_max):
    """Coefficients b_0..b_dmax of prod_{deg x <= dmax} (1 - chi(pi_x) T^deg x)^-1.

    Exact cyclotomic values when chi has no shift, complex numbers otherwise.
    """
    if isinstance(chi, UnramifiedCharacter):
        chi = QuasiCharacter(chi)
    psi = chi.finite
    m = psi.modulus
    series = [Cyclo.integer(m, 1)] + [Cyclo(m) for _ in range(d_max)]
    for place in field.places(d_max):
        d = place.degree
        a = finite_value(field, psi, place)
        # multiply by 1/(1 - a T^d) in place: b_n += a * b_{n-d}
        for n in range(d, d_max + 1):
            series[n] = series[n] + a * series[n - d]
    if chi.shift == 0:
        return series
    z = cmath.exp(-chi.shift * log(field.q))
    return [complex(b) * z ** n for n, b in enumerate(series)]


def _T_at(field, chi: QuasiCharacter, s0):
    return cmath.exp(-(complex(s0) + chi.shift) * log(field.q))


def l_value(field, chi, s0):
    """L(chi, s0)."""
    if isinstance(chi, UnramifiedCharacter):
        chi = QuasiCharacter(chi)
    return l_polynomial(field, chi.finite)(_T_at(field, chi, s0))


def l_derivative(field, chi, s0, order=1):
    """d^j/ds^j L(chi, s) at s0, using d/ds = -(ln q) T d/dT."""
    if isinstance(chi, UnramifiedCharacter):
        chi = QuasiCharacter(chi)
    T = _T_at(field, chi, s0)
    return (-log(field.q)) ** order * l_polynomial(field, chi.finite).theta(T, order)


def canonical_value(field, psi: UnramifiedCharacter):
    """psi on the canonical divisor, an exact root of unity."""
    return psi.omega.value(field.canonical_log)


def epsilon_factor(field, chi, s):
    """eps(chi, s) with L(chi, 1/2 + s) = eps(chi, s) L(chi^-1, 1/2 - s)."""
    if isinstance(chi, UnramifiedCharacter):
        chi = QuasiCharacter(chi)
    deg = field.canonical[1]
    w = complex(canonical_value(field, chi.finite))
    return w * cmath.exp(-deg * (complex(s) + chi.shift) * log(field.q))


def intertwining_c(field, chi, s):
    """c(chi, s) = chi^2(c) |c|^(2s)."""
    if isinstance(chi, UnramifiedCharacter):
        chi = QuasiCharacter(chi)
    deg = field.canonical[1]
    w = complex(canonical_value(field, chi.finite.square()))
    return w * cmath.exp(-2 * deg * (complex(s) + chi.shift) * log(field.q))


def functional_equation_residual(field, chi, s):
    if isinstance(chi, UnramifiedCharacter):
        chi = QuasiCharacter(chi)
    lhs = l_value(field, chi, 0.5 + s)
    rhs = epsilon_factor(field, chi, s) * l_value(field, chi.inverse(), 0.5 - s)
    return abs(lhs - rhs) / max(1.0, abs(lhs))


# -- zeros -------------------------------------------------------------------

def _roots_mp(coeffs, dps):
    """Roots of sum coeffs[d] T^d with mpmath at the given precision."""
    with mpmath.workdps(dps):
        hi = list(reversed(coeffs))
        try:
            return mpmath.polyroots(hi, maxsteps=400, extraprec=2 * dps)
        except mpmath.libmp.NoConvergence as exc:
            raise PrecisionError(f"root finding did not converge at {dps} digits") from exc


def _sort_key(z):
    z = complex(z)
    return (round(z.real, 9), round(z.imag, 9))


def _zeros_exact(rat):
    out = []
    for factor, mult in squarefree_decomposition(rat):
        if len(factor) == 2:
            out.append((complex(-factor[0] / factor[1]), mult))
            continue
        for r in _roots_mp([mpmath.mpf(c.numerator) / c.denominator for c in factor], 50):
            out.append((complex(r), mult))
    return sorted(out, key=lambda t: _sort_key(t[0]))


def _cluster(roots, radius):
    clusters = []
    for r in roots:
        for cl in clusters:
            if abs(cl[0] - r) < radius:
                cl.append(r)
                break
        else:
            clusters.append([r])
    centers = [sum(cl) / len(cl) for cl in clusters]
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            if abs(centers[i] - centers[j]) < 2 * radius:
                raise PrecisionError("root clusters are too close to separate")
    return [(complex(c), len(cl)) for c, cl in zip(centers, clusters)]


def _zeros_numeric(coeffs, dps):
    with mpmath.workdps(dps):
        mc = [c.to_mpc() if isinstance(c, Cyclo) else mpmath.mpc(c) for c in coeffs]
        roots = _roots_mp(mc, dps)
        return _cluster(roots, CLUSTER_RADIUS)


def zeros(lp: LPolynomial, radius=CLUSTER_RADIUS, dps=40, retries=3):
    """Roots of the numerator with multiplicity, as (tau, mult) pairs."""
    if lp.degree <= 0:
        return []
    rat = lp.rational_coeffs()
    if rat is not None:
        return _zeros_exact(rat)
    last = None
    for k in range(retries):
        try:
            out = _zeros_numeric(lp.coeffs, dps * (2 ** k))
            return sorted(out, key=lambda t: _sort_key(t[0]))
        except PrecisionError as exc:
            last = exc
    raise last


def field_zeros(field, psi):
    c = _cache(field, "zeros")
    if psi not in c:
        c[psi] = zeros(l_polynomial(field, psi))
    return c[psi]


# -- zero pairs ----------------------------------------------------------------

@dataclass(frozen=True)
class ZeroPair:
    """A zero and its image under (omega, tau) -> (omega^-1, 1/(q tau))."""

    first: tuple
    second: tuple
    order: int
    multiplicity: int
    self_paired: bool

    @property
    def members(self):
        return (self.first,) if self.self_paired else (self.first, self.second)


def _close(a, b, tol=1e-7):
    return abs(a - b) < tol * max(1.0, abs(a))


def zero_pairs(field, include_sign_twists=False):
    chars = list(field.pic_characters)
    if include_sign_twists:
        chars += [c.twist() for c in field.pic_characters]
    q = field.q
    remaining = {psi: list(field_zeros(field, psi)) for psi in chars}
    pairs = []
    for psi in chars:
        while remaining[psi]:
            tau, mult = remaining[psi].pop(0)
            partner = psi.inverse()
            image = 1 / (q * tau)
            if partner == psi and _close(image, tau):
                if mult % 2:
                    raise TheoremViolation(
                        f"self-paired zero {tau} of {psi.label()} has odd multiplicity {mult}")
                pairs.append(ZeroPair((psi, tau), (psi, tau), mult // 2, mult, True))
                continue
            pool = remaining[partner]
            for i, (t2, m2) in enumerate(pool):
                if _close(t2, image):
                    if m2 != mult:
                        raise TheoremViolation(f"paired zeros of {psi.label()} differ in multiplicity")
                    pool.pop(i)
                    break
            else:
                raise TheoremViolation(f"zero {tau} of {psi.label()} has no functional-equation partner")
            pairs.append(ZeroPair((psi, tau), (partner, image), mult, mult, False))
    return pairs


# -- unramified cover ----------------------------------------------------------

def cover_zeta(field, tol=1e-6) -> LPolynomial:
    """Zeta numerator of the maximal unramified abelian cover of constant
    field degree one, assembled as the product of all Pic^0 L-polynomials."""
    chars = field.pic_characters
    m = field.table.exponent
    exact = [Cyclo.integer(m, 1)]
    with mpmath.workdps(60):
        numeric = [mpmath.mpc(1)]
        for psi in chars:
            lp = l_polynomial(field, psi)
            exact = convolve(exact, lp.coeffs, Cyclo(m))
            numeric = convolve(numeric, [c.to_mpc() for c in lp.coeffs], mpmath.mpc(0))
        rounded = []
        for z in numeric:
            r = int(mpmath.nint(z.real))
            if abs(z - r) > tol:
                raise PrecisionError(f"cover coefficient {complex(z)} is not within {tol} of an integer")
            rounded.append(r)
    ints = []
    for c in exact:
        v = c.rational_value()
        if v is None or v.denominator != 1:
            raise TheoremViolation("cover zeta numerator is not integral")
        ints.append(int(v))
    if ints != rounded:
        raise TheoremViolation("numeric and exact cover products disagree")
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
    g, h, q = field.genus, field.class_number, field.q
    deg = len(ints) - 1
    if deg != 2 * ((g - 1) * h + 1):
        raise TheoremViolation(f"cover zeta numerator has degree {deg}")
    g_cover = deg // 2
    if 2 * g_cover - 2 != h * (2 * g - 2):
        raise TheoremViolation("cover genus violates Hurwitz")
    if qeval(ints, Fraction(1)) == 0 or qeval(ints, Fraction(1, q)) == 0:
        raise TheoremViolation("cover zeta numerator vanishes at T=1 or T=1/q")
    return LPolynomial([Cyclo.integer(1, a) for a in ints], q, None, principal=True)


def cover_genus(lp: LPolynomial):
    return lp.degree // 2
