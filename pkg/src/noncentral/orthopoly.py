"""Classical orthogonal polynomial kernels.

Jacobi, Laguerre, Meixner-Pollaczek and the hyperbolic Meixner-Pollaczek
family, all evaluated by forward three-term recurrence.  Norms and
normalization constants are computed in log space.  Gauss rules come from
the eigen-decomposition of a truncated Jacobi matrix (Golub-Welsch).
"""
from dataclasses import dataclass
import math

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln, loggamma

from .errors import ParameterDomainError, StructuralError


@dataclass(frozen=True)
class JacobiParams:
    mu: float
    nu: float

    def __post_init__(self):
        if not (self.mu > -1 and self.nu > -1):
            raise ParameterDomainError(
                f"Jacobi parameters need mu, nu > -1 (got mu={self.mu}, nu={self.nu})")


@dataclass(frozen=True)
class LaguerreParams:
    nu: float

    def __post_init__(self):
        if not self.nu > -1:
            raise ParameterDomainError(f"Laguerre parameter needs nu > -1 (got {self.nu})")


@dataclass(frozen=True)
class MPParams:
    """Meixner-Pollaczek parameters.

    ``hyperbolic`` selects the family obtained by continuing the angle to
    the imaginary axis; it only relaxes the angle constraint to phi > 0.
    """

    mu: float
    phi: float
    hyperbolic: bool = False

    def __post_init__(self):
        if not self.mu > 0:
            raise ParameterDomainError(f"Meixner-Pollaczek needs mu > 0 (got {self.mu})")
        if self.hyperbolic:
            if not self.phi > 0:
                raise ParameterDomainError(f"hyperbolic family needs phi > 0 (got {self.phi})")
        elif not 0 < self.phi < math.pi:
            raise ParameterDomainError(
                f"Meixner-Pollaczek needs 0 < phi < pi (got {self.phi}); "
                "an angle outside this range corresponds to E <= 0")


def _scalar_or_array(values, x):
    return values if np.ndim(x) else float(values)


# --- Jacobi ---------------------------------------------------------------

def jacobi_recurrence(n, mu, nu):
    """Coefficients of ``x P_n = a P_n + c P_{n-1} + d P_{n+1}``.

    Obtained from the (1 +/- x)/2 recurrences.  The n = 0 entries are the
    removable-singularity limits, so mu + nu = 0 or -1 is fine.
    """
    s = mu + nu
    if n == 0:
        return (nu - mu) / (s + 2), 0.0, 2.0 / (s + 2)
    a = (nu - mu) * (nu + mu) / ((2 * n + s) * (2 * n + s + 2))
    c = 2 * (n + mu) * (n + nu) / ((2 * n + s) * (2 * n + s + 1))
    d = 2 * (n + 1) * (n + s + 1) / ((2 * n + s + 1) * (2 * n + s + 2))
    return a, c, d


def jacobi_table(nmax, p, x):
    """Rows P_0 .. P_nmax evaluated at ``x``; shape ``(nmax + 1,) + x.shape``."""
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape)
    out[0] = 1.0
    prev = np.zeros_like(x)
    for n in range(nmax):
        a, c, d = jacobi_recurrence(n, p.mu, p.nu)
        out[n + 1] = ((x - a) * out[n] - c * prev) / d
        prev = out[n]
    return out


def jacobi_eval(n, p, x):
    """Jacobi polynomial P_n^{(mu, nu)}(x) by forward recurrence."""
    if n < 0:
        raise ParameterDomainError("degree must be non-negative")
    return _scalar_or_array(jacobi_table(n, p, x)[n], x)


def jacobi_log_norm(n, p):
    """log of the squared norm of P_n under (1-x)^mu (1+x)^nu on [-1, 1]."""
    mu, nu = p.mu, p.nu
    s = mu + nu
    lead = (s + 1) * math.log(2) + gammaln(n + mu + 1) + gammaln(n + nu + 1) - gammaln(n + 1)
    if n == 0:
        # (s + 1) Gamma(s + 1) -> Gamma(s + 2) also covers s = -1
        return float(lead - gammaln(s + 2))
    return float(lead - math.log(2 * n + s + 1) - gammaln(n + s + 1))


def jacobi_norm(n, p):
    """Squared norm of P_n^{(mu, nu)} with weight (1-x)^mu (1+x)^nu."""
    return math.exp(jacobi_log_norm(n, p))


def jacobi_jacobi_matrix(N, mu, nu):
    """Diagonal and positive off-diagonal of the orthonormal Jacobi chain."""
    a = np.empty(N)
    b = np.empty(N)
    p = JacobiParams(mu, nu)
    for n in range(N):
        a[n], _, d = jacobi_recurrence(n, mu, nu)
        # b_n = d_n * ||P_{n+1}|| / ||P_n||
        b[n] = d * math.exp(0.5 * (jacobi_log_norm(n + 1, p) - jacobi_log_norm(n, p)))
    return a, b


# --- Laguerre -------------------------------------------------------------

def laguerre_table(nmax, p, x):
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = p.nu + 1 - x
    for n in range(1, nmax):
        out[n + 1] = ((2 * n + p.nu + 1 - x) * out[n] - (n + p.nu) * out[n - 1]) / (n + 1)
    return out


def laguerre_eval(n, p, x):
    """Generalized Laguerre L_n^nu(x), seeded L_0 = 1, L_1 = nu + 1 - x."""
    if n < 0:
        raise ParameterDomainError("degree must be non-negative")
    return _scalar_or_array(laguerre_table(n, p, x)[n], x)


def laguerre_log_norm(n, p):
    return float(gammaln(n + p.nu + 1) - gammaln(n + 1))


def laguerre_norm(n, p):
    """Squared norm Gamma(n + nu + 1) / Gamma(n + 1) under x^nu e^{-x}."""
    return math.exp(laguerre_log_norm(n, p))


def laguerre_jacobi_matrix(N, nu):
    n = np.arange(N, dtype=float)
    return 2 * n + nu + 1, np.sqrt((n + 1) * (n + nu + 1))


# --- Meixner-Pollaczek ----------------------------------------------------

def _mp_table(kmax, mu, cphi, sphi, z):
    z = np.asarray(z, dtype=float)
    out = np.empty((kmax + 1,) + z.shape)
    out[0] = 1.0
    prev = np.zeros_like(z)
    for k in range(kmax):
        out[k + 1] = (2 * ((k + mu) * cphi + z * sphi) * out[k] - (k + 2 * mu - 1) * prev) / (k + 1)
        prev = out[k]
    return out


def mp_table(kmax, p, z):
    if p.hyperbolic:
        return _mp_table(kmax, p.mu, math.cosh(p.phi), math.sinh(p.phi), z)
    return _mp_table(kmax, p.mu, math.cos(p.phi), math.sin(p.phi), z)


def mp_eval(k, p, z):
    """Meixner-Pollaczek P_k^mu(z, phi)."""
    if p.hyperbolic:
        raise ParameterDomainError("use hyperbolic_mp_eval for the hyperbolic family")
    return _scalar_or_array(mp_table(k, p, z)[k], z)


def hyperbolic_mp_eval(k, p, z):
    """Hyperbolic-type Meixner-Pollaczek polynomial (angle continued to i*phi)."""
    if not p.hyperbolic:
        p = MPParams(p.mu, p.phi, hyperbolic=True)
    return _scalar_or_array(mp_table(k, p, z)[k], z)


def mp_log_weight(p, z):
    z = np.asarray(z, dtype=float)
    lg = loggamma(p.mu + 1j * z).real
    return (2 * p.mu * math.log(2 * math.sin(p.phi)) + (2 * p.phi - math.pi) * z
            + 2 * lg - math.log(2 * math.pi))


def mp_weight(p, z):
    """Weight making the MP polynomials orthogonal with norms Gamma(n+2mu)/n!.

    rho(z) = (2 sin phi)^{2 mu} e^{(2 phi - pi) z} |Gamma(mu + iz)|^2 / (2 pi)
    """
    if p.hyperbolic:
        raise ParameterDomainError("the hyperbolic family has no weight on the real line here")
    return _scalar_or_array(np.exp(mp_log_weight(p, z)), z)


def mp_log_norm(n, p):
    return float(gammaln(n + 2 * p.mu) - gammaln(n + 1))


# --- Gauss rules ----------------------------------------------------------

def golub_welsch(a, b, mass=1.0):
    """Nodes and weights of the Gauss rule for a finite Jacobi matrix.

    ``a`` has length N, ``b`` at least N - 1 entries.  Off-diagonal entries
    must be strictly positive.
    """
    a = np.asarray(a, dtype=float)
    N = len(a)
    if N < 1:
        raise StructuralError("need at least one recursion level")
    b = np.asarray(b, dtype=float)[: N - 1]
    bad = np.flatnonzero(~(b > 0))
    if bad.size:
        raise StructuralError(f"non-positive off-diagonal b_{bad[0]} = {b[bad[0]]}", index=int(bad[0]))
    if N == 1:
        return a.copy(), np.array([float(mass)])
    nodes, vecs = eigh_tridiagonal(a, b)
    return nodes, mass * vecs[0] ** 2


def quadrature_from_recursion(coeffs, N):
    """N-point Gauss rule of a recursion chain (any object with ``arrays`` and ``mass``)."""
    if N < 1:
        raise StructuralError("quadrature size must be >= 1")
    a, b = coeffs.arrays(N)
    return golub_welsch(a, b, coeffs.mass)


def gauss_jacobi(N, mu, nu):
    """Gauss rule for the weight (1-x)^mu (1+x)^nu on [-1, 1]."""
    a, b = jacobi_jacobi_matrix(N, mu, nu)
    return golub_welsch(a, b, jacobi_norm(0, JacobiParams(mu, nu)))


def gauss_laguerre(N, nu):
    """Gauss rule for the weight x^nu e^{-x} on [0, inf)."""
    a, b = laguerre_jacobi_matrix(N, nu)
    return golub_welsch(a, b, math.exp(gammaln(nu + 1)))
