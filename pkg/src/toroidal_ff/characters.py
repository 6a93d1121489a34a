"""Unramified characters: Pic^0-dual characters, the degree-parity sign and
complex shifts.

A character of Pic^0 = Z/d_1 x ... x Z/d_r is an exponent tuple ``a`` with
value ``exp(2 pi i sum a_i x_i / d_i)`` on the class with discrete log ``x``.
The sign twist multiplies the value at a place of degree d by (-1)^d, and a
shift s multiplies it by q^(-s d).  Degree-d places are measured against a
fixed degree-one place A1 through the class [x - d A1].
"""

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, log

from .cyclotomic import Cyclo
from .errors import ContractViolation


def _lcm(a, b):
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class UnramifiedCharacter:
    """A finite-order unramified character (omega, delta)."""

    exponents: tuple
    invariants: tuple
    sign_twist: int = 0

    def __post_init__(self):
        if len(self.exponents) != len(self.invariants):
            raise ContractViolation("exponent vector does not match the group")
        if self.sign_twist not in (0, 1):
            raise ContractViolation("sign twist must be 0 or 1")
        object.__setattr__(self, "exponents",
                           tuple(int(a) % d for a, d in zip(self.exponents, self.invariants)))

    @property
    def modulus(self):
        """Exponent of the group: every value is an m-th root of unity."""
        return self.invariants[-1] if self.invariants else 1

    def phase_index(self, x):
        """k with omega(x) = zeta_m^k."""
        m = self.modulus
        return sum(a * xi * (m // d) for a, xi, d in zip(self.exponents, x, self.invariants)) % m

    def phase(self, x):
        return Fraction(self.phase_index(x), self.modulus)

    def value(self, x):
        """omega(x) as an exact cyclotomic integer."""
        return Cyclo.root(self.modulus, self.phase_index(x))

    @property
    def omega(self):
        """The Pic^0 part with the sign twist removed."""
        return UnramifiedCharacter(self.exponents, self.invariants, 0)

    @property
    def is_omega_trivial(self):
        return not any(self.exponents)

    @property
    def is_trivial(self):
        return self.is_omega_trivial and self.sign_twist == 0

    @property
    def is_principal(self):
        """Trivial on Pic^0: the L-function has poles."""
        return self.is_omega_trivial

    def __mul__(self, other):
        if self.invariants != other.invariants:
            raise ContractViolation("characters of different groups")
        return UnramifiedCharacter(tuple(a + b for a, b in zip(self.exponents, other.exponents)),
                                   self.invariants, (self.sign_twist + other.sign_twist) % 2)

    def inverse(self):
        return UnramifiedCharacter(tuple(-a for a in self.exponents), self.invariants, self.sign_twist)

    def square(self):
        return self * self

    def order(self):
        n = 1
        for a, d in zip(self.exponents, self.invariants):
            n = _lcm(n, d // gcd(a, d))
        return _lcm(n, 2) if self.sign_twist else n

    @property
    def is_quadratic(self):
        """Order at most 2."""
        return self.square().is_trivial

    def twist(self, delta=1):
        return UnramifiedCharacter(self.exponents, self.invariants, (self.sign_twist + delta) % 2)

    def label(self):
        s = "(" + ",".join(str(a) for a in self.exponents) + ")"
        return s + ("*sgn" if self.sign_twist else "")

    def __repr__(self):
        return f"UnramifiedCharacter{self.label()}"


def trivial_character(invariants, sign_twist=0):
    return UnramifiedCharacter((0,) * len(invariants), tuple(invariants), sign_twist)


@dataclass(frozen=True)
class QuasiCharacter:
    """chi = omega * sgn^delta * |.|^s."""

    finite: UnramifiedCharacter
    shift: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "shift", complex(self.shift))

    @property
    def real_part(self):
        return self.shift.real

    def inverse(self):
        return QuasiCharacter(self.finite.inverse(), -self.shift)

    def __mul__(self, other):
        if isinstance(other, UnramifiedCharacter):
            return QuasiCharacter(self.finite * other, self.shift)
        return QuasiCharacter(self.finite * other.finite, self.shift + other.shift)

    def square(self):
        return self * self

    def with_shift(self, s):
        return QuasiCharacter(self.finite, s)

    def norm_power(self, q):
        """q^(-s): the value of |.|^s on a uniformizer at a degree-one place."""
        return cmath.exp(-self.shift * log(q))

    def __repr__(self):
        return f"QuasiCharacter({self.finite.label()}, s={self.shift})"


def character_group(table):
    """All 2h characters (omega, delta): delta=0 first, trivial omega first."""
    inv = tuple(table.invariants)
    omegas = [UnramifiedCharacter(e, inv, 0) for e in product(*[range(d) for d in inv])]
    return omegas + [w.twist() for w in omegas]


def pic_characters(table):
    """The h characters of Pic^0 (delta = 0)."""
    return character_group(table)[:table.order]


def quadratic_characters(field):
    """Nontrivial (omega, delta) of order two."""
    table = field.table if hasattr(field, "table") else field
    return [c for c in character_group(table) if c.is_quadratic and not c.is_trivial]


def evaluate(field, chi, place):
    """chi(pi_x) as a complex number."""
    if isinstance(chi, UnramifiedCharacter):
        chi = QuasiCharacter(chi)
    d = place.degree
    z = complex(finite_value(field, chi.finite, place))
    return z * cmath.exp(-chi.shift * d * log(field.q))


def finite_value(field, psi: UnramifiedCharacter, place):
    """psi(pi_x) exactly: omega([x - deg(x) A1]) * (-1)^(delta deg x)."""
    x = field.relative_log(place)
    val = psi.value(x)
    if psi.sign_twist and place.degree % 2:
        val = -val
    return val


def omega_on_class(psi: UnramifiedCharacter, table, cls):
    return psi.value(table.log(cls))


def rebase(chi: QuasiCharacter, old_field, new_field):
    """The same idele-class character written against new_field's A1.

    Moving A1 to A1' multiplies the degree-d value by
    omega([A1' - A1])^d, which is absorbed into the shift.
    """
    psi = chi.finite
    x_old = old_field.base_log
    x_new = new_field.base_log
    diff = old_field.table.add_logs(x_new, old_field.table.scale_log(-1, x_old))
    ph = float(psi.phase(diff))
    return QuasiCharacter(psi, chi.shift - 2j * cmath.pi * ph / log(old_field.q))


def is_chi_squared_trivial(chi: QuasiCharacter, q, tol=1e-9):
    """chi^2 = 1 as idele class characters."""
    if not chi.finite.omega.square().is_trivial:
        return False
    z = cmath.exp(-2 * chi.shift * log(q))
    return abs(z - 1) < tol


def residual_sign(chi: QuasiCharacter, q, tol=1e-9):
    """+1 or -1 if chi^2 = |.|^(+-1), else 0."""
    if not chi.finite.omega.square().is_trivial:
        return 0
    z = cmath.exp(-2 * chi.shift * log(q))
    if abs(z - q) < tol * q:
        return -1
    if abs(z - 1 / q) < tol:
        return 1
    return 0
