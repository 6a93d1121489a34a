"""Dense univariate polynomials over a FiniteField.

Polynomials are tuples of element codes, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from itertools import product


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(a):
    return len(a) - 1 if a else -1


class PolyRing:
    """Arithmetic in F[x] for a fixed field F."""

    def __init__(self, field):
        self.F = field
        self.zero = ()
        self.one = (1,)
        self.x = (0, 1)

    def __repr__(self):
        return f"{self.F!r}[x]"

    def const(self, c):
        return (c,) if c else ()

    def add(self, a, b):
        F = self.F
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return trim(out)

    def neg(self, a):
        return tuple(self.F.neg(c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, c, a):
        if c == 0:
            return ()
        return tuple(self.F.mul(c, x) for x in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        F = self.F
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return trim(out)

    def shift(self, a, n):
        return (0,) * n + a if a else ()

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        db = len(b) - 1
        r = list(a)
        if len(r) <= db:
            return (), trim(r)
        inv_lead = F.inv(b[-1])
        qt = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c == 0:
                continue
            c = F.mul(c, inv_lead)
            qt[i - db] = c
            for j, y in enumerate(b):
                if y:
                    r[i - db + j] = F.sub(r[i - db + j], F.mul(c, y))
        return trim(qt), trim(r[:db])

    def mod(self, a, b):
        return self.divmod(a, b)[1]

    def exact_div(self, a, b):
        qt, r = self.divmod(a, b)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return qt

    def monic(self, a):
        if not a or a[-1] == 1:
            return a
        return self.scale(self.F.inv(a[-1]), a)

    def gcd(self, a, b):
        while b:
            a, b = b, self.mod(a, b)
        return self.monic(a)

    def xgcd(self, a, b):
        """Return (g, s, t) with s*a + t*b = g and g monic (or zero)."""
        r0, r1 = a, b
        s0, s1 = self.one, ()
        t0, t1 = (), self.one
        while r1:
            qt, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(qt, s1))
            t0, t1 = t1, self.sub(t0, self.mul(qt, t1))
        if not r0:
            return (), (), ()
        c = self.F.inv(r0[-1])
        return self.scale(c, r0), self.scale(c, s0), self.scale(c, t0)

    def pow(self, a, e):
        out = self.one
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def powmod(self, a, e, m):
        out = self.mod(self.one, m)
        a = self.mod(a, m)
        while e:
            if e & 1:
                out = self.mod(self.mul(out, a), m)
            a = self.mod(self.mul(a, a), m)
            e >>= 1
        return out

    def deriv(self, a):
        F = self.F
        return trim(F.scalar(i, c) for i, c in enumerate(a) if i > 0)

    def eval(self, a, x, field=None, embed=None):
        """Horner evaluation; with ``field``/``embed`` the coefficients are
        first mapped into a larger field through the lookup table ``embed``."""
        F = field or self.F
        acc = 0
        for c in reversed(a):
            if embed is not None:
                c = embed[c]
            acc = F.add(F.mul(acc, x), c)
        return acc

    def compose(self, a, b):
        out = ()
        for c in reversed(a):
            out = self.add(self.mul(out, b), self.const(c))
        return out

    def resultant(self, a, b):
        """Res(a, b) by the Euclidean recurrence."""
        F = self.F
        if not a or not b:
            return 0
        m, n = degree(a), degree(b)
        if n == 0:
            return F.pow(b[0], m)
        r = self.mod(a, b)
        if not r:
            return 0
        sign = 1 if (m * n) % 2 == 0 else F.neg(1)
        lead = F.pow(b[-1], m - degree(r))
        return F.mul(F.mul(sign, lead), self.resultant(b, r))

    def is_squarefree(self, a):
        if degree(a) <= 0:
            return True
        d = self.deriv(a)
        if not d:
            return False
        return degree(self.gcd(a, d)) == 0

    def is_irreducible(self, a):
        """Rabin-style test: x^{q^n} = x mod a and gcd conditions."""
        n = degree(a)
        if n <= 0:
            return False
        if n == 1:
            return True
        q = self.F.q
        a = self.monic(a)
        xp = self.x
        powers = {}
        cur = xp
        for i in range(1, n + 1):
            cur = self.powmod(cur, q, a)
            powers[i] = cur
        if self.sub(powers[n], self.mod(xp, a)):
            return False
        for r in _prime_divisors(n):
            g = self.gcd(a, self.sub(powers[n // r], xp))
            if degree(g) > 0:
                return False
        return True

    def monic_polys(self, deg):
        """All monic polynomials of the given degree, lexicographic order."""
        q = self.F.q
        for low in product(range(q), repeat=deg):
            yield tuple(reversed(low)) + (1,) if deg else (1,)

    def polys_below(self, deg):
        """All polynomials of degree < deg (including zero)."""
        q = self.F.q
        for low in product(range(q), repeat=deg):
            yield trim(reversed(low))


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
