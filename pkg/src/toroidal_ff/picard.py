"""Degree-zero divisor class groups of imaginary hyperelliptic curves.

Classes are reduced Mumford pairs ``(u, v)``: ``u`` monic with
``deg u <= g``, ``deg v < deg u`` and ``u | v^2 + h v - f``.  The pair
represents ``div(u, v) - deg(u) * oo``.  The group law is Cantor's
composition followed by reduction.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd

from .curves import CurveModel, Place
from .errors import ContractViolation, InvariantViolation
from .poly import degree


@dataclass(frozen=True, order=True)
class DivisorClass:
    u: tuple = (1,)
    v: tuple = ()

    @property
    def is_identity(self):
        return self.u == (1,)

    def __repr__(self):
        return f"DivisorClass(u={list(self.u)}, v={list(self.v)})"


IDENTITY = DivisorClass()


class Cantor:
    """Mumford-pair arithmetic on the Jacobian of y^2 + h y = f."""

    def __init__(self, curve: CurveModel):
        self.curve = curve
        self.R = curve.R
        self.f, self.h = curve.f, curve.h
        self.g = curve.genus

    def is_semireduced(self, u, v):
        R = self.R
        if not u or u[-1] != 1 or degree(v) >= degree(u):
            return False
        w = R.sub(R.add(R.mul(v, v), R.mul(self.h, v)), self.f)
        return not R.mod(w, u)

    def compose(self, a, b):
        R = self.R
        u1, v1 = a
        u2, v2 = b
        d1, e1, e2 = R.xgcd(u1, u2)
        d, c1, c2 = R.xgcd(d1, R.add(R.add(v1, v2), self.h))
        s1, s2, s3 = R.mul(c1, e1), R.mul(c1, e2), c2
        u = R.exact_div(R.mul(u1, u2), R.mul(d, d))
        num = R.add(R.add(R.mul(R.mul(s1, u1), v2), R.mul(R.mul(s2, u2), v1)),
                    R.mul(s3, R.add(R.mul(v1, v2), self.f)))
        v = R.mod(R.exact_div(num, d), u)
        return u, v

    def reduce(self, u, v):
        R = self.R
        v = R.mod(v, u)
        while degree(u) > self.g:
            u2 = R.exact_div(R.sub(R.sub(self.f, R.mul(self.h, v)), R.mul(v, v)), u)
            u2 = R.monic(u2)
            v = R.mod(R.sub(R.neg(self.h), v), u2)
            u = u2
        return DivisorClass(R.monic(u), v)

    def add(self, a: DivisorClass, b: DivisorClass) -> DivisorClass:
        if a.is_identity:
            return b
        if b.is_identity:
            return a
        return self.reduce(*self.compose((a.u, a.v), (b.u, b.v)))

    def neg(self, a: DivisorClass) -> DivisorClass:
        if a.is_identity:
            return a
        R = self.R
        return DivisorClass(a.u, R.mod(R.sub(R.neg(self.h), a.v), a.u))

    def mul(self, n: int, a: DivisorClass) -> DivisorClass:
        if n < 0:
            n, a = -n, self.neg(a)
        out = IDENTITY
        while n:
            if n & 1:
                out = self.add(out, a)
            a = self.add(a, a)
            n >>= 1
        return out

    def semireduced_pairs(self, m):
        """All semi-reduced pairs (u, v) with deg u = m."""
        R = self.R
        out = []
        for u in R.monic_polys(m):
            for v in R.polys_below(m):
                if self.is_semireduced(u, v):
                    out.append((u, v))
        return out

    def reduced_classes(self):
        out = [IDENTITY]
        for m in range(1, self.g + 1):
            out.extend(DivisorClass(u, v) for u, v in self.semireduced_pairs(m))
        return sorted(out)


def smith_normal_form(A):
    """Return (U, D, V) with U*A*V = D diagonal, d_1 | d_2 | ..., U, V unimodular."""
    n = len(A)
    m = len(A[0]) if n else 0
    D = [list(row) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(n, m)):
        while True:
            nz = [(abs(D[i][j]), i, j) for i in range(t, n) for j in range(t, m) if D[i][j]]
            if not nz:
                return U, D, V
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, n):
                c = D[i][t] // D[t][t]
                if c:
                    add_row(t, i, -c)
                if D[i][t]:
                    done = False
            for j in range(t + 1, m):
                c = D[t][j] // D[t][t]
                if c:
                    add_col(t, j, -c)
                if D[t][j]:
                    done = False
            if not done:
                continue
            bad = [(i, j) for i in range(t + 1, n) for j in range(t + 1, m) if D[i][j] % D[t][t]]
            if bad:
                add_row(bad[0][0], t, 1)
                continue
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


class ClassGroupTable:
    """Pic^0 as an explicit finite abelian group with discrete logs."""

    def __init__(self, curve: CurveModel):
        self.curve = curve
        if curve.is_rational:
            self.law = None
            self.elements = [IDENTITY]
        else:
            self.law = Cantor(curve)
            self.elements = self.law.reduced_classes()
        self._index = {a: i for i, a in enumerate(self.elements)}
        self._compute_structure()

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return IDENTITY

    @property
    def exponent(self):
        return self.invariants[-1] if self.invariants else 1

    def __contains__(self, a):
        return a in self._index

    def add(self, a, b):
        if self.law is None:
            return IDENTITY
        c = self.law.add(a, b)
        if c not in self._index:
            raise InvariantViolation(f"{a} + {b} = {c} left the enumerated class set")
        return c

    def neg(self, a):
        return a if self.law is None else self.law.neg(a)

    def mul(self, n, a):
        return IDENTITY if self.law is None else self.law.mul(n, a)

    def element_order(self, a):
        n, cur = 1, a
        while not cur.is_identity:
            cur = self.add(cur, a)
            n += 1
        return n

    def _compute_structure(self):
        # greedy extension of a subgroup one generator at a time
        span = {IDENTITY: ()}
        gens, rels = [], []
        for a in self.elements:
            if a in span:
                continue
            k = len(gens)
            m, cur = 1, a
            while cur not in span:
                cur = self.add(cur, a)
                m += 1
            rel = list(span[cur]) + [0] * (k - len(span[cur]))
            rels.append([-r for r in rel] + [m])
            gens.append(a)
            new_span = {}
            for s, vec in span.items():
                vec = tuple(vec) + (0,) * (k - len(vec))
                cur = s
                for j in range(m):
                    new_span[cur] = vec + (j,)
                    cur = self.add(cur, a)
            span = new_span
        if len(span) != len(self.elements):
            raise InvariantViolation("generator search did not exhaust the group")
        k = len(gens)
        rels = [r + [0] * (k - len(r)) for r in rels]
        if k == 0:
            self.invariants = ()
            self.generators = []
            self._log = {IDENTITY: ()}
            self._exp = {(): IDENTITY}
            return
        _, D, V = smith_normal_form(rels)
        diag = [D[i][i] for i in range(k)]
        keep = [i for i, d in enumerate(diag) if d != 1]
        self.invariants = tuple(diag[i] for i in keep)
        log = {}
        for a, vec in span.items():
            full = [sum(vec[r] * V[r][c] for r in range(k)) for c in range(k)]
            log[a] = tuple(full[i] % diag[i] for i in keep)
        self._log = log
        self._exp = {v: a for a, v in log.items()}
        if len(self._exp) != len(log):
            raise InvariantViolation("discrete log is not injective")
        self.generators = []
        for j in range(len(self.invariants)):
            e = tuple(int(i == j) for i in range(len(self.invariants)))
            self.generators.append(self._exp[e])

    def log(self, a):
        try:
            return self._log[a]
        except KeyError:
            raise ContractViolation(f"{a} is not a reduced class of this curve") from None

    def from_log(self, vec):
        vec = tuple(int(x) % d for x, d in zip(vec, self.invariants))
        return self._exp[vec]

    def add_logs(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariants))

    def scale_log(self, n, x):
        return tuple((n * a) % d for a, d in zip(x, self.invariants))

    def two_torsion(self):
        return [a for a in self.elements if self.add(a, a).is_identity]


def class_group(curve: CurveModel) -> ClassGroupTable:
    return ClassGroupTable(curve)


def place_class(curve: CurveModel, place: Place, law=None) -> DivisorClass:
    """The class [P - deg(P) * oo]."""
    if curve.is_rational or place.is_infinite or place.inert:
        return IDENTITY
    law = law or Cantor(curve)
    return law.reduce(place.u, place.v)


def divisor_class(curve: CurveModel, divisor, base: Place = None) -> DivisorClass:
    """Reduced representative of a degree-0 divisor given as {Place: coeff}.

    Divisors of nonzero degree are accepted only when ``base`` is given, in
    which case the class [D - deg(D) * base] is returned.
    """
    items = list(divisor.items()) if hasattr(divisor, "items") else list(divisor)
    deg = sum(c * P.degree for P, c in items)
    if deg != 0 and base is None:
        raise ContractViolation(f"divisor has degree {deg}, expected 0")
    if curve.is_rational:
        return IDENTITY
    law = Cantor(curve)
    out = IDENTITY
    for P, c in items:
        out = law.add(out, law.mul(c, place_class(curve, P, law)))
    if deg:
        out = law.add(out, law.mul(-deg, place_class(curve, base, law)))
    return out


def degree_one_class(curve: CurveModel) -> Place:
    """The fixed degree-one place: oo on hyperelliptic models, the least
    rational point on the projective line."""
    from .curves import infinite_place, places_of_degree
    if curve.is_rational:
        return places_of_degree(curve, 1)[0]
    return infinite_place(curve)


def canonical_class(curve: CurveModel, base: Place = None):
    """(class of K - (2g-2) * base, 2g-2) for the chosen degree-one place."""
    deg = 2 * curve.genus - 2
    if curve.is_rational:
        return IDENTITY, deg
    # dx / (2y + h) has divisor (2g-2) * oo
    if base is None or base.is_infinite:
        return IDENTITY, deg
    law = Cantor(curve)
    return law.mul(-deg, place_class(curve, base, law)), deg


def principal_divisor_of_linear(curve: CurveModel, c):
    """div(x - c) for c in the base field as {Place: coeff}."""
    from .curves import canonicalize, infinite_place
    F = curve.base
    out = {infinite_place(curve): -2 if not curve.is_rational else -1}
    if curve.is_rational:
        P = canonicalize(curve, (c,), 1)
        out[P] = out.get(P, 0) + 1
        return out
    L, emb = curve.lift_field(2)
    ys = curve.y_values(L, emb, emb[c])
    if len(ys) == 2 and all(y in set(emb) for y in ys):
        for y in ys:
            P = canonicalize(curve, (emb[c], y), 2)
            out[P] = out.get(P, 0) + 1
    elif len(ys) == 1:
        P = canonicalize(curve, (emb[c], ys[0]), 2)
        out[P] = out.get(P, 0) + 2
    else:
        P = canonicalize(curve, (emb[c], ys[0]), 2)
        out[P] = out.get(P, 0) + 1
    return out
