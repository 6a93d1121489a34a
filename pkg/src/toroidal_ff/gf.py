"""Finite fields GF(p^k) with integer-coded elements.

An element of GF(p)[t]/(m(t)) is stored as the integer ``sum(a_i * p**i)``
where ``a_0 + a_1 t + ...`` is its reduced representative.  The modulus is
primitive, so multiplication runs through discrete-log tables and addition
(odd p) through Zech logarithms; in characteristic 2 addition is XOR.

Default moduli come from a fixed table of Conway polynomials, which makes the
subfield embeddings GF(p^k) -> GF(p^{kn}) canonical.
"""

from functools import lru_cache
from math import gcd

FIELD_SIZE_LIMIT = 2 ** 20

# Conway polynomials, coefficients low-to-high.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (5, 7): (3, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (2, 4, 3, 0, 1, 0, 0, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (3, 6, 4, 5, 1, 0, 1),
    (7, 7): (4, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 2, 6, 4, 0, 0, 0, 0, 1),
}


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
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


def _primitive_root(p):
    if p == 2:
        return 1
    fac = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fac):
            return g
    raise ValueError(p)


def _search_primitive_modulus(p, k):
    # lexicographically least monic primitive polynomial of degree k
    for n in range(p ** k):
        low = [(n // p ** i) % p for i in range(k)]
        if low[0] == 0:
            continue
        try:
            FiniteField(p, k, tuple(low) + (1,))
        except ValueError:
            continue
        return tuple(low) + (1,)
    raise ValueError(f"no primitive polynomial of degree {k} over GF({p})")


def default_modulus(p, k):
    if (p, k) in CONWAY:
        return CONWAY[(p, k)]
    if k == 1:
        return ((p - _primitive_root(p)) % p, 1)
    return _search_primitive_modulus(p, k)


class FiniteField:
    """GF(p^k) with elements coded as integers in ``range(p**k)``."""

    def __init__(self, p, k=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        if p ** k > FIELD_SIZE_LIMIT:
            from .errors import ResourceLimitError
            raise ResourceLimitError(f"GF({p}^{k}) exceeds the field size guard {FIELD_SIZE_LIMIT}")
        self.p = p
        self.k = k
        self.q = p ** k
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        n = q - 1
        exp = [0] * n
        log = [-1] * q
        c = 1
        if k == 1:
            root = (-self.modulus[0]) % p
            for i in range(n):
                if log[c] != -1:
                    raise ValueError("modulus is not primitive")
                exp[i] = c
                log[c] = i
                c = c * root % p
        else:
            top_scale = p ** (k - 1)
            red = self.modulus[:-1]
            for i in range(n):
                if log[c] != -1:
                    raise ValueError("modulus is not primitive")
                exp[i] = c
                log[c] = i
                # multiply by t and reduce
                lead = c // top_scale
                c = (c - lead * top_scale) * p
                if lead:
                    if p == 2:
                        c ^= self._modulus_int_low()
                    else:
                        c = self._sub_scaled(c, red, lead)
        if c != 1:
            raise ValueError("modulus is not primitive")
        self._exp = exp
        self._log = log
        if p != 2:
            zech = [-1] * n
            for i in range(n):
                e = exp[i]
                d0 = e % p
                s = e - d0 + (d0 + 1) % p
                zech[i] = log[s] if s else -1
            self._zech = zech
            self._half = n // 2

    def _modulus_int_low(self):
        return sum(c << i for i, c in enumerate(self.modulus[:-1]))

    def _sub_scaled(self, c, red, lead):
        p = self.p
        out, scale = 0, 1
        for r in red:
            d = (c // scale) % p
            out += ((d - lead * r) % p) * scale
            scale *= p
        return out

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- element coding ------------------------------------------------------
    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise ValueError(f"element of {self!r} needs at most {self.k} coefficients")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def to_coeffs(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def from_int(self, n):
        """Image of the integer n under Z -> GF(p)."""
        return n % self.p

    def elements(self):
        return range(self.q)

    @property
    def generator(self):
        return self._exp[1 % (self.q - 1)]

    # -- arithmetic ----------------------------------------------------------
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.q - 1)]

    def neg(self, a):
        if a == 0 or self.p == 2:
            return a
        return self._exp[(self._log[a] + self._half) % (self.q - 1)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def scalar(self, n, a):
        """n * a for an integer n."""
        return self.mul(n % self.p, a) if n % self.p else 0

    def log(self, a):
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, i):
        return self._exp[i % (self.q - 1)]

    def frobenius(self, a, power):
        """a ** power where power is typically a power of p."""
        return self.pow(a, power)

    def is_square(self, a):
        if a == 0 or self.p == 2:
            return True
        return self._log[a] % 2 == 0

    def quadratic_character(self, a):
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def sqrt(self, a):
        """One square root of a (None if a is a non-square)."""
        if a == 0:
            return 0
        la = self._log[a]
        if self.p == 2:
            return self._exp[(la * (self.q // 2)) % (self.q - 1)]
        if la % 2:
            return None
        return self._exp[la // 2]

    def absolute_trace(self, a):
        """Trace to the prime field, as an integer in range(p)."""
        t, x = 0, a
        for _ in range(self.k):
            t = self.add(t, x)
            x = self.pow(x, self.p)
        return t

    def order_of(self, a):
        n = self.q - 1
        return n // gcd(n, self._log[a])


@lru_cache(maxsize=None)
def get_field(p, k=1, modulus=None):
    return FiniteField(p, k, modulus)


@lru_cache(maxsize=None)
def embedding(small, big):
    """Field embedding small -> big as a lookup table indexed by element code.

    For Conway moduli the image of the generator is the norm-compatible
    power of big's generator; otherwise the least-log root of small's modulus
    in big is used.
    """
    if small.p != big.p or big.k % small.k:
        raise ValueError(f"{small!r} does not embed in {big!r}")
    if small.k == 1:
        return tuple(range(small.p))
    step = (big.q - 1) // (small.q - 1)
    root = None
    for j in range(1, small.q - 1):
        if gcd(j, small.q - 1) != 1:
            continue
        cand = big.exp(j * step)
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, cand), c)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise ValueError("no root of the modulus found")
    table = [0] * small.q
    powers = [1]
    for _ in range(small.k - 1):
        powers.append(big.mul(powers[-1], root))
    for a in range(small.q):
        acc = 0
        for c, pw in zip(small.to_coeffs(a), powers):
            if c:
                acc = big.add(acc, big.mul(c, pw))
        table[a] = acc
    return tuple(table)


@lru_cache(maxsize=None)
def restriction(small, big):
    """Inverse of ``embedding(small, big)`` as a dict on the image."""
    return {b: a for a, b in enumerate(embedding(small, big))}
