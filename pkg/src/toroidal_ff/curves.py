"""Curve models over finite fields, point counts and closed points.

Two kinds of model are supported: the projective line, and imaginary
hyperelliptic curves ``y^2 + h(x) y = f(x)`` with ``f`` monic of odd degree
``2g+1`` and ``deg h <= g``.  The latter have exactly one point at infinity,
which is rational.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import ContractViolation, ResourceLimitError
from .gf import FIELD_SIZE_LIMIT, FiniteField, embedding, get_field, restriction
from .poly import PolyRing, degree, trim

RATIONAL = "rational"
HYPERELLIPTIC = "hyperelliptic"


class CurveModel:
    """A smooth projective curve given by an explicit affine model."""

    def __init__(self, base: FiniteField, kind: str = RATIONAL, f=None, h=None, check=True):
        self.base = base
        self.kind = kind
        self.R = PolyRing(base)
        if kind == RATIONAL:
            self.f = self.h = ()
            self.genus = 0
        elif kind == HYPERELLIPTIC:
            f = trim(f or ())
            h = trim(h or ())
            df = degree(f)
            if df < 1 or df % 2 == 0:
                raise ContractViolation("f must have odd degree 2g+1")
            if f[-1] != 1:
                raise ContractViolation("f must be monic")
            g = (df - 1) // 2
            if degree(h) > g:
                raise ContractViolation(f"h must have degree at most g={g}")
            if base.p == 2 and not h:
                raise ContractViolation("characteristic 2 needs h != 0")
            self.f, self.h = f, h
            self.genus = g
            if check and not self.is_nonsingular():
                raise ContractViolation("the affine model is singular")
        else:
            raise ContractViolation(f"unknown model kind {kind!r}")

    @property
    def q(self):
        return self.base.q

    @property
    def p(self):
        return self.base.p

    @property
    def is_rational(self):
        return self.kind == RATIONAL

    def __repr__(self):
        if self.is_rational:
            return f"P1/{self.base!r}"
        return f"y^2+({list(self.h)})y=({list(self.f)}) over {self.base!r}"

    def __eq__(self, other):
        return (isinstance(other, CurveModel) and self.base == other.base
                and self.kind == other.kind and self.f == other.f and self.h == other.h)

    def __hash__(self):
        return hash((self.base, self.kind, self.f, self.h))

    def discriminant_poly(self):
        """h^2 + 4f, whose square roots give 2y + h in odd characteristic."""
        R = self.R
        return R.add(R.mul(self.h, self.h), R.scale(self.base.from_int(4), self.f))

    def is_nonsingular(self):
        if self.is_rational:
            return True
        R = self.R
        if self.base.p != 2:
            return R.is_squarefree(self.discriminant_poly())
        dh, df = R.deriv(self.h), R.deriv(self.f)
        crit = R.add(R.mul(df, df), R.mul(R.mul(dh, dh), self.f))
        return degree(R.gcd(self.h, crit)) == 0

    def lift_field(self, n):
        """The extension GF(q^n) together with the embedding table from GF(q)."""
        F = self.base
        if F.q ** n > FIELD_SIZE_LIMIT:
            raise ResourceLimitError(f"GF({F.q}^{n}) exceeds the field size guard")
        L = get_field(F.p, F.k * n)
        return L, embedding(F, L)

    def y_values(self, L, emb, x):
        """All y in L with y^2 + h(x)y = f(x)."""
        R = self.R
        fx = R.eval(self.f, x, L, emb)
        hx = R.eval(self.h, x, L, emb)
        if L.p == 2:
            if hx == 0:
                return [L.sqrt(fx)]
            c = L.div(fx, L.mul(hx, hx))
            z = _artin_schreier_roots(L).get(c)
            if z is None:
                return []
            y = L.mul(hx, z)
            return [y, L.add(y, hx)]
        disc = L.add(L.mul(hx, hx), L.scalar(4, fx))
        r = L.sqrt(disc)
        if r is None:
            return []
        half = L.inv(L.from_int(2))
        y1 = L.mul(L.sub(r, hx), half)
        if r == 0:
            return [y1]
        y2 = L.mul(L.sub(L.neg(r), hx), half)
        return sorted([y1, y2])


@lru_cache(maxsize=None)
def _artin_schreier_roots(L):
    table = {}
    for w in range(L.q):
        table.setdefault(L.add(L.mul(w, w), w), w)
    return table


def rational_curve(p, k=1):
    return CurveModel(get_field(p, k), RATIONAL)


def hyperelliptic_curve(p, k, f, h=()):
    F = get_field(p, k)
    return CurveModel(F, HYPERELLIPTIC, tuple(f), tuple(h))


def count_points(curve: CurveModel, n: int) -> int:
    """Number of points of the smooth projective model over GF(q^n)."""
    if n < 1:
        raise ContractViolation("n must be positive")
    if curve.q ** n > FIELD_SIZE_LIMIT:
        raise ResourceLimitError(f"q^n = {curve.q}^{n} exceeds the size guard")
    if curve.is_rational:
        return curve.q ** n + 1
    return _count_points_cached(curve, n)


@lru_cache(maxsize=None)
def _count_points_cached(curve, n):
    L, emb = curve.lift_field(n)
    R = curve.R
    total = 1
    if L.p == 2:
        for x in range(L.q):
            hx = R.eval(curve.h, x, L, emb)
            if hx == 0:
                total += 1
                continue
            c = L.div(R.eval(curve.f, x, L, emb), L.mul(hx, hx))
            if L.absolute_trace(c) == 0:
                total += 2
    else:
        disc = curve.discriminant_poly()
        for x in range(L.q):
            total += 1 + L.quadratic_character(R.eval(disc, x, L, emb))
    return total


@dataclass(frozen=True, order=True)
class Place:
    """A closed point: a Frobenius orbit of geometric points of given size.

    ``representative`` is the lexicographically least coordinate tuple of
    the orbit, coded in GF(q^degree).  The Mumford pair ``(u, v)`` over the
    base field describes the affine place as a divisor; ``inert`` marks
    places lying over a degree ``degree/2`` point of the x-line, whose
    class ``[P - degree*oo]`` is trivial.
    """

    degree: int
    is_infinite: bool
    representative: tuple
    u: tuple = dc_field(default=(1,), compare=False)
    v: tuple = dc_field(default=(), compare=False)
    inert: bool = dc_field(default=False, compare=False)

    @property
    def sort_key(self):
        return (self.degree, self.is_infinite, self.representative)

    def norm(self, q):
        return q ** self.degree

    def __repr__(self):
        if self.is_infinite:
            return "Place(oo)"
        return f"Place(deg={self.degree}, rep={self.representative})"


def infinite_place(curve):
    return Place(1, True, ())


def _frobenius_orbit(L, point, q):
    orbit = [tuple(point)]
    cur = tuple(point)
    while True:
        cur = tuple(L.pow(c, q) for c in cur)
        if cur == orbit[0]:
            return orbit
        orbit.append(cur)


def _x_orbit_size(L, x, q):
    n, cur = 1, L.pow(x, q)
    while cur != x:
        cur = L.pow(cur, q)
        n += 1
    return n


def canonicalize(curve: CurveModel, point, n: int) -> Place:
    """The Place through an affine point with coordinates in GF(q^n)."""
    L, emb = curve.lift_field(n)
    q = curve.q
    point = tuple(point)
    if not curve.is_rational:
        x, y = point
        if L.add(L.mul(y, y), L.mul(curve.R.eval(curve.h, x, L, emb), y)) != curve.R.eval(curve.f, x, L, emb):
            raise ContractViolation("point is not on the curve")
    orbit = _frobenius_orbit(L, point, q)
    d = len(orbit)
    M, _ = curve.lift_field(d)
    back = restriction(M, L)
    coded = [tuple(back[c] for c in pt) for pt in orbit]
    return _make_place(curve, M, coded)


def _make_place(curve, M, orbit_in_M):
    """Build the Place from its full orbit coded in GF(q^d), d = orbit size."""
    d = len(orbit_in_M)
    rep = min(orbit_in_M)
    if curve.is_rational:
        return Place(d, False, rep, u=(), v=(), inert=False)
    F = curve.base
    q = F.q
    RM = PolyRing(M)
    back = restriction(F, M)
    xs = sorted({pt[0] for pt in orbit_in_M})
    x0 = rep[0]
    dx = _x_orbit_size(M, x0, q)
    u = (1,)
    for xi in xs:
        u = RM.mul(u, (M.neg(xi), 1))
    if dx < d:
        # the orbit covers both points above an inert fibre
        u_base = tuple(back[c] for c in u)
        return Place(d, False, rep, u=u_base, v=(), inert=True)
    v = ()
    ys = {pt[0]: pt[1] for pt in orbit_in_M}
    for xi in xs:
        num, den = (1,), 1
        for xj in xs:
            if xj != xi:
                num = RM.mul(num, (M.neg(xj), 1))
                den = M.mul(den, M.sub(xi, xj))
        v = RM.add(v, RM.scale(M.div(ys[xi], den), num))
    u_base = tuple(back[c] for c in u)
    v_base = tuple(back[c] for c in v)
    return Place(d, False, rep, u=u_base, v=v_base, inert=False)


def places_of_degree(curve: CurveModel, d: int):
    return list(_places_of_degree_cached(curve, d))


@lru_cache(maxsize=None)
def _places_of_degree_cached(curve, d):
    L, emb = curve.lift_field(d)
    q = curve.q
    seen = set()
    out = []
    if curve.is_rational:
        points = ((x,) for x in range(L.q))
    else:
        points = ((x, y) for x in range(L.q) for y in curve.y_values(L, emb, x))
    for pt in points:
        if pt in seen:
            continue
        orbit = _frobenius_orbit(L, pt, q)
        seen.update(orbit)
        if len(orbit) == d:
            out.append(_make_place(curve, L, orbit))
    if d == 1:
        out.append(infinite_place(curve))
    out.sort()
    return tuple(out)


def enumerate_places(curve: CurveModel, d_max: int):
    """All places of degree at most d_max, sorted by (degree, infinite, rep)."""
    if d_max < 1:
        raise ContractViolation("d_max must be positive")
    out = []
    for d in range(1, d_max + 1):
        out.extend(places_of_degree(curve, d))
    return out
