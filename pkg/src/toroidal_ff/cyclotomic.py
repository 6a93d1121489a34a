"""Exact arithmetic in the group ring Z[Z/m], read as Z[zeta_m].

An element is a length-m tuple ``a`` standing for ``sum a[k] zeta^k`` with
``zeta = exp(2 pi i / m)``.  Products are cyclic convolutions; equality,
hashing and rationality tests first reduce modulo the m-th cyclotomic
polynomial, so distinct tuples may denote the same number.
"""

import cmath
from fractions import Fraction
from functools import lru_cache

import mpmath


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, low-to-high."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _int_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _int_exact_div(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact division by cyclotomic polynomial")
    return out


class Cyclo:
    """An element of Z[zeta_m] (or Q[zeta_m] when coefficients are Fractions)."""

    __slots__ = ("m", "c")

    def __init__(self, m, coeffs=None):
        self.m = m
        if coeffs is None:
            coeffs = (0,) * m
        self.c = tuple(coeffs)

    @classmethod
    def root(cls, m, k, scale=1):
        c = [0] * m
        c[k % m] = scale
        return cls(m, c)

    @classmethod
    def integer(cls, m, n):
        return cls.root(m, 0, n)

    def __add__(self, other):
        if not isinstance(other, Cyclo):
            other = Cyclo.integer(self.m, other)
        return Cyclo(self.m, [a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.m, [-a for a in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        m = self.m
        if not isinstance(other, Cyclo):
            return Cyclo(m, [a * other for a in self.c])
        out = [0] * m
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        out[(i + j) % m] += a * b
        return Cyclo(m, out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by zeta^k."""
        m = self.m
        out = [0] * m
        for i, a in enumerate(self.c):
            out[(i + k) % m] = a
        return Cyclo(m, out)

    def conj(self):
        m = self.m
        out = [0] * m
        for i, a in enumerate(self.c):
            out[(-i) % m] = a
        return Cyclo(m, out)

    def reduced(self):
        """Canonical tuple of length phi(m): remainder modulo Phi_m."""
        phi = cyclotomic_polynomial(self.m)
        r = list(self.c)
        n = len(phi) - 1
        for i in range(len(r) - 1, n - 1, -1):
            a = r[i]
            if a:
                for j, y in enumerate(phi):
                    r[i - n + j] -= a * y
        return tuple(r[:n])

    def __eq__(self, other):
        if not isinstance(other, Cyclo):
            other = Cyclo.integer(self.m, other)
        if other.m != self.m:
            return complex(self) == complex(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.m, self.reduced()))

    def is_zero(self):
        return not any(self.reduced())

    def rational_value(self):
        """The value as a Fraction if it lies in Q, else None."""
        r = self.reduced()
        if any(r[1:]):
            return None
        return Fraction(r[0]) if r else Fraction(0)

    def is_rational(self):
        return self.rational_value() is not None

    def __complex__(self):
        m = self.m
        return sum(complex(a) * cmath.exp(2j * cmath.pi * k / m) for k, a in enumerate(self.c) if a) + 0j

    def to_mpc(self):
        m = self.m
        acc = mpmath.mpc(0)
        for k, a in enumerate(self.c):
            if a:
                acc += mpmath.mpf(a) * mpmath.expjpi(mpmath.mpf(2 * k) / m)
        return acc

    def __repr__(self):
        rv = self.rational_value()
        if rv is not None:
            return f"Cyclo({rv})"
        terms = [f"{a}*z^{k}" for k, a in enumerate(self.c) if a]
        return f"Cyclo[{self.m}](" + " + ".join(terms) + ")"


def convolve(a, b, zero):
    """Product of two coefficient lists over any ring."""
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out
