"""Hecke eigenvalues on Eisenstein families and their derivative spans.

The span of E, E^(1), ..., E^(n-1) (derivatives in s) is modelled by
coordinates; the operator at a place x acts on it by a lower triangular
matrix whose diagonal is the eigenvalue of E and whose subdiagonals come
from the Leibniz rule.
"""

from dataclasses import dataclass, field as dc_field
from math import comb, log, sqrt

import numpy as np

from .characters import QuasiCharacter, UnramifiedCharacter, evaluate, is_chi_squared_trivial, residual_sign
from .errors import ContractViolation, InvariantViolation

EISENSTEIN = "Eisenstein"
RESIDUE = "Residue"
EVEN_DERIVATIVE = "EvenDerivative"

WINDOW_TOL = 1e-9


def _as_quasi(chi):
    return QuasiCharacter(chi) if isinstance(chi, UnramifiedCharacter) else chi


def hecke_lambda(field, chi, place, parity=0):
    """q_x^(1/2) (chi^-1(pi_x) + (-1)^l chi(pi_x))."""
    chi = _as_quasi(chi)
    z = evaluate(field, chi, place)
    qx = field.q ** place.degree
    sign = -1 if parity % 2 else 1
    return sqrt(qx) * (1 / z + sign * z)


@dataclass(frozen=True)
class EigenData:
    chi: QuasiCharacter
    place: object
    value: complex
    minus: complex
    norm: int

    def character_value(self):
        """chi(pi_x) recovered from the two eigenvalues."""
        return (self.value - self.minus) / (2 * sqrt(self.norm))

    def inverse_value(self):
        return (self.value + self.minus) / (2 * sqrt(self.norm))


def eigen_data(field, chi, place) -> EigenData:
    chi = _as_quasi(chi)
    return EigenData(chi, place, hecke_lambda(field, chi, place, 0), hecke_lambda(field, chi, place, 1),
                     field.q ** place.degree)


@dataclass
class DerivativeBasisAction:
    n: int
    matrix: np.ndarray
    basis_kind: str
    place: object = None
    chi: QuasiCharacter = None

    def minimal_polynomial_degree(self, tol=1e-9):
        """Degree of the minimal polynomial: the nilpotency index of M - lambda."""
        M = self.matrix
        N = M - M[0, 0] * np.eye(self.n)
        scale = max(1.0, float(np.max(np.abs(M))))
        P = np.eye(self.n, dtype=complex)
        for k in range(1, self.n + 1):
            P = P @ N
            if np.max(np.abs(P)) < tol * scale ** k:
                return k
        return self.n


def _check_kind(field, chi, basis_kind):
    q = field.q
    sq_trivial = is_chi_squared_trivial(chi, q)
    residual = residual_sign(chi, q) != 0
    if basis_kind == EVEN_DERIVATIVE and not sq_trivial:
        raise ContractViolation("even-derivative basis needs chi^2 = 1")
    if basis_kind == RESIDUE and not residual:
        raise ContractViolation("residue basis needs chi^2 = |.|^(+-1)")
    if basis_kind == EISENSTEIN and (sq_trivial or residual):
        raise ContractViolation("Eisenstein basis needs chi^2 outside {1, |.|^(+-1)}")
    if basis_kind not in (EISENSTEIN, RESIDUE, EVEN_DERIVATIVE):
        raise ContractViolation(f"unknown basis kind {basis_kind!r}")


def jordan_matrix(field, chi, place, n, basis_kind=EISENSTEIN, check=True) -> DerivativeBasisAction:
    """Matrix of the Hecke operator at ``place`` on the n-term derivative span.

    Row i lists the image of the i-th basis vector: for the plain derivative
    basis M[i][k] = C(i, k) (ln q_x)^(i-k) lambda^(i-k); the even-derivative
    basis keeps rows and columns of even order only.
    """
    chi = _as_quasi(chi)
    if n < 1:
        raise ContractViolation("n must be positive")
    if check:
        _check_kind(field, chi, basis_kind)
    lq = place.degree * log(field.q)
    lam = (hecke_lambda(field, chi, place, 0), hecke_lambda(field, chi, place, 1))
    M = np.zeros((n, n), dtype=complex)
    if basis_kind == EVEN_DERIVATIVE:
        for a in range(n):
            for b in range(a + 1):
                M[a, b] = comb(2 * a, 2 * b) * lq ** (2 * (a - b)) * lam[0]
    else:
        for i in range(n):
            for k in range(i + 1):
                M[i, k] = comb(i, k) * lq ** (i - k) * lam[(i - k) % 2]
    return DerivativeBasisAction(n, M, basis_kind, place, chi)


def full_jordan_matrix(field, chi, place, n):
    """The plain derivative-basis matrix with no basis-kind check."""
    return jordan_matrix(field, chi, place, n, EISENSTEIN, check=False)


def even_block_is_closed(field, chi, place, n, tol=1e-10):
    """Odd-order derivatives do not feed even-order ones when lambda^- = 0."""
    M = full_jordan_matrix(field, chi, place, 2 * n - 1).matrix
    return all(abs(M[2 * a, 2 * b + 1]) < tol for a in range(n) for b in range(a))


@dataclass
class TemperedReport:
    tempered: bool
    real_part: float
    windows: list = dc_field(default_factory=list)


def in_window(lam, qx, tol=WINDOW_TOL):
    bound = 2 * sqrt(qx)
    return abs(lam.imag) <= tol * max(1.0, bound) and abs(lam.real) <= bound * (1 + tol) + tol


def is_tempered(field, chi, max_degree=3, tol=WINDOW_TOL):
    """Decide Re chi = 0 and compare with the eigenvalue window at every place."""
    chi = _as_quasi(chi)
    by_shift = abs(chi.real_part) < tol
    windows = []
    for place in field.places(max_degree):
        lam = hecke_lambda(field, chi, place)
        qx = field.q ** place.degree
        ok = in_window(lam, qx, tol)
        windows.append((place, lam, ok))
        if ok != by_shift:
            raise InvariantViolation(
                f"window test at {place} gives {ok} but Re chi = {chi.real_part}")
    return TemperedReport(by_shift, chi.real_part, windows)


def relation_is_invariant(field, chi, place, tol=1e-9):
    """Whether the line E^(1) = (ln q)(2g - 2) E in span(E, E^(1)) is stable
    under the Hecke operator at ``place``."""
    chi = _as_quasi(chi)
    c = log(field.q) * (2 * field.genus - 2)
    M = full_jordan_matrix(field, chi, place, 2).matrix
    v = np.array([-c, 1.0], dtype=complex)
    w = v @ M
    resid = w - M[0, 0] * v
    return bool(np.max(np.abs(resid)) < tol * max(1.0, float(np.max(np.abs(M)))))


def commutator_norm(A, B):
    return float(np.max(np.abs(A @ B - B @ A)))


def lambda_minus_vanishes(field, chi, max_degree=4, tol=1e-10):
    chi = _as_quasi(chi)
    return all(abs(hecke_lambda(field, chi, x, 1)) < tol * sqrt(field.q ** x.degree)
               for x in field.places(max_degree))
