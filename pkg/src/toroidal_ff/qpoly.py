"""Polynomials over Q with Fraction coefficients (low-to-high lists)."""

from fractions import Fraction


def qtrim(a):
    a = [Fraction(x) for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def qsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return qtrim(x - y for x, y in zip(a, b))


def qderiv(a):
    return qtrim(i * c for i, c in enumerate(a) if i)


def qdivmod(a, b):
    a, b = qtrim(a), qtrim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    if len(r) < len(b):
        return [], r
    out = [Fraction(0)] * (len(r) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = r[i + len(b) - 1] / b[-1]
        out[i] = c
        for j, y in enumerate(b):
            r[i + j] -= c * y
    return qtrim(out), qtrim(r[:len(b) - 1])


def qmonic(a):
    a = qtrim(a)
    return [c / a[-1] for c in a] if a else a


def qgcd(a, b):
    a, b = qtrim(a), qtrim(b)
    while b:
        a, b = b, qdivmod(a, b)[1]
    return qmonic(a)


def qeval(a, x):
    acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_decomposition(f):
    """Yun's algorithm: list of (factor, multiplicity) with f = lc * prod factor^mult."""
    f = qtrim(f)
    if len(f) <= 1:
        return []
    out = []
    df = qderiv(f)
    a = qgcd(f, df)
    b = qdivmod(f, a)[0]
    c = qdivmod(df, a)[0]
    d = qsub(c, qderiv(b))
    i = 1
    while len(b) > 1:
        a = qgcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = qdivmod(b, a)[0]
        c = qdivmod(d, a)[0]
        d = qsub(c, qderiv(b))
        i += 1
    return out
