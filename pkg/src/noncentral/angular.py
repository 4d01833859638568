"""Angular sector: Jacobi-weighted basis, tridiagonal cases, H and Q families.

The polar equation is expanded in

    chi_n(x) = A_n (1-x)^alpha (1+x)^beta P_n^{(mu, nu)}(x),   x = cos(theta)

with A_n the inverse square root of the Jacobi norm.  Three exponent
choices make the polar operator tridiagonal:

* case A: alpha = mu/2, beta = nu/2 (potential with a cos(theta) term C0)
* case B: alpha = mu/2, beta = (nu+1)/2, nu free
* case C: alpha = (mu+1)/2, beta = nu/2, mu free (mirror of B under x -> -x)

The expansion coefficients are orthonormal polynomials in a spectral
variable z; their unnormalized versions are H_n^sigma (case A) and
Q_n^tau (cases B, C).
"""
from dataclasses import dataclass, field
import enum
import math

import numpy as np
from scipy.special import gammaln, loggamma

from . import orthopoly
from .chain import RecursionCoeffs
from .errors import (ImaginaryParameterError, ParameterDomainError, QuantumNumberError,
                     RegimeError, StructuralError)

LOG2 = math.log(2.0)


class AngularCase(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    DIAGONAL = "DIAGONAL"


@dataclass(frozen=True)
class AngularPotentialParams:
    C_hat: float
    C: float
    C0: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.C_hat, self.C, self.C0)):
            raise ParameterDomainError("angular potential parameters must be finite")


@dataclass(frozen=True)
class AngularBasisParams:
    """Basis parameters for one azimuthal number.

    ``c_aux`` carries the coupling that enters only the diagonal: C1 for
    case B and C2 for case C.
    """

    mu: float
    nu: float
    alpha: float
    beta: float
    m: int
    case: AngularCase = AngularCase.A
    special_branch: bool = False
    c_aux: float = 0.0

    def __post_init__(self):
        if not (self.mu > -1 and self.nu > -1):
            raise ParameterDomainError(f"basis needs mu, nu > -1 (got {self.mu}, {self.nu})")

    @property
    def weight_exponents(self):
        """Exponents (2 alpha, 2 beta) of the measure in which the basis lives."""
        return 2 * self.alpha, 2 * self.beta


@dataclass(frozen=True)
class AngularQuantumBook:
    """Admissible (n, m) pairs for a given gamma.

    ``N_m`` maps each admissible m to its largest n; pairs run over
    n = 0 .. N_m.
    """

    case: AngularCase
    gamma: float
    M: int
    j: int
    N_m: dict = field(default_factory=dict)
    nu_free: float = None

    def entries(self):
        return [(n, m) for m in sorted(self.N_m) for n in range(self.N_m[m] + 1)]

    def __contains__(self, nm):
        n, m = nm
        return m in self.N_m and 0 <= n <= self.N_m[m]

    def __len__(self):
        return sum(v + 1 for v in self.N_m.values())

    @property
    def empty(self):
        return not self.N_m


# --- quantum-number bookkeeping --------------------------------------------

def _radicands(case, pot, m):
    """Radicands needed by a case, labelled by the combination they test."""
    m2 = m * m
    plus = ("m^2 + C_hat + C", m2 + pot.C_hat + pot.C)
    minus = ("m^2 + C_hat - C", m2 + pot.C_hat - pot.C)
    if case in (AngularCase.A, AngularCase.DIAGONAL):
        return [plus, minus]
    if case is AngularCase.B:
        return [plus]
    return [minus]


def minimum_m(case, pot):
    """Smallest |m| for which every radicand of the case is non-negative."""
    worst = max(-r for _, r in _radicands(case, pot, 0))
    M = 0 if worst <= 0 else int(math.floor(math.sqrt(worst)))
    while min(r for _, r in _radicands(case, pot, M)) < 0:
        M += 1
    return M


def _root(label, radicand, m, allow_special):
    if radicand < 0:
        raise ImaginaryParameterError(
            f"{label} = {radicand:g} < 0 at m = {m}: the basis parameter would be imaginary")
    if allow_special and 0 < radicand < 1:
        return -math.sqrt(radicand), True
    return math.sqrt(radicand), False


def basis_params(case, pot, m, nu_free=None, allow_special=False):
    """Basis parameters for azimuthal number ``m``.

    Parameters
    ----------
    case : AngularCase
    pot : AngularPotentialParams
    m : int
    nu_free : float, optional
        The free Jacobi parameter: nu for case B, mu for case C.  Required
        for those cases, ignored otherwise.
    allow_special : bool
        Take the negative root, in (-1, 0), whenever a radicand lies in
        (0, 1).
    """
    rads = dict(_radicands(case, pot, m))
    if case in (AngularCase.A, AngularCase.DIAGONAL):
        mu, s1 = _root("m^2 + C_hat + C", rads["m^2 + C_hat + C"], m, allow_special)
        nu, s2 = _root("m^2 + C_hat - C", rads["m^2 + C_hat - C"], m, allow_special)
        return AngularBasisParams(mu, nu, mu / 2, nu / 2, m, case, s1 or s2)
    if nu_free is None:
        raise ParameterDomainError(f"case {case.value} needs the free Jacobi parameter")
    if not nu_free > -1:
        raise ParameterDomainError(f"free Jacobi parameter must exceed -1 (got {nu_free})")
    if case is AngularCase.B:
        mu, sp = _root("m^2 + C_hat + C", rads["m^2 + C_hat + C"], m, allow_special)
        C1 = m * m + pot.C_hat - pot.C
        return AngularBasisParams(mu, nu_free, mu / 2, (nu_free + 1) / 2, m, case, sp, C1)
    nu, sp = _root("m^2 + C_hat - C", rads["m^2 + C_hat - C"], m, allow_special)
    C2 = m * m + pot.C_hat + pot.C
    return AngularBasisParams(nu_free, nu, (nu_free + 1) / 2, nu / 2, m, case, sp, C2)


def _largest_n(bound):
    # tolerate round-off when the bound is an exact integer
    return int(math.floor(bound + 1e-12))


def allowed_quantum_numbers(case, pot, gamma, nu_free=None):
    """Book of (n, m) pairs that keep the representation definite.

    Case A (and the diagonal case): n <= |gamma + 1/2| - (mu_m + nu_m + 1)/2.
    Case B: n <= |gamma + 1/2| - (mu_m + nu)/2 - 1; case C is its mirror.
    """
    half = abs(gamma + 0.5)
    M = minimum_m(case, pot)
    N_m = {}
    m = M
    while True:
        bp = basis_params(case, pot, m, nu_free)
        if case in (AngularCase.A, AngularCase.DIAGONAL):
            bound = half - (bp.mu + bp.nu + 1) / 2
        else:
            bound = half - (bp.mu + bp.nu) / 2 - 1
        n_max = _largest_n(bound)
        if n_max < 0:
            break
        N_m[m] = n_max
        if m:
            N_m[-m] = n_max
        m += 1
    j = max(N_m) if N_m else -1
    return AngularQuantumBook(case, gamma, M, j, dict(sorted(N_m.items())), nu_free)


# --- basis -----------------------------------------------------------------

def _log_A(n, mu, nu):
    return -0.5 * orthopoly.jacobi_log_norm(n, orthopoly.JacobiParams(mu, nu))


def _envelope(bp, x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1):
        raise ParameterDomainError("x = cos(theta) must lie in [-1, 1]")
    at_edge = ((x == 1) & (bp.alpha < 0)) | ((x == -1) & (bp.beta < 0))
    if np.any(at_edge):
        raise ParameterDomainError("basis is unbounded at an endpoint for a negative exponent")
    with np.errstate(divide="ignore"):
        return np.power(1 - x, bp.alpha) * np.power(1 + x, bp.beta)


def chi_table(nmax, bp, x):
    """Rows chi_0 .. chi_nmax at ``x``."""
    P = orthopoly.jacobi_table(nmax, orthopoly.JacobiParams(bp.mu, bp.nu), x)
    A = np.exp([_log_A(n, bp.mu, bp.nu) for n in range(nmax + 1)])
    shape = (nmax + 1,) + (1,) * np.ndim(x)
    return A.reshape(shape) * _envelope(bp, x) * P


def chi_eval(n, bp, x):
    """Angular basis function chi_n(x) = A_n (1-x)^alpha (1+x)^beta P_n(x)."""
    if n < 0:
        raise ParameterDomainError("degree must be non-negative")
    v = chi_table(n, bp, x)[n]
    return v if np.ndim(x) else float(v)


# --- tridiagonal representations -------------------------------------------

def _jacobi_off(n, mu, nu):
    # sqrt((n+1)(n+mu+1)(n+nu+1)(n+s+1) / ((2n+s+1)(2n+s+3))) / (2n+s+2)
    s = mu + nu
    return math.sqrt((n + 1) * (n + mu + 1) * (n + nu + 1) * (n + s + 1)
                     / ((2 * n + s + 1) * (2 * n + s + 3))) / (2 * n + s + 2)


def _jacobi_diag(n, mu, nu):
    return orthopoly.jacobi_recurrence(n, mu, nu)[0]


def matrix_elements_case_a(n, nprime, bp, gamma, C0):
    """Entry (n, n') of <chi_n| H_theta - E_theta |chi_n'> for case A.

    H_theta contains the potential (C_hat + C x)/(2(1-x^2)) - C0 x/2 and
    2 E_theta = gamma (gamma + 1).
    """
    mu, nu = bp.mu, bp.nu
    if n == nprime:
        return (-0.5 * C0 * _jacobi_diag(n, mu, nu)
                + 0.5 * (n + (mu + nu + 1) / 2) ** 2 - 0.5 * (gamma + 0.5) ** 2)
    if abs(n - nprime) == 1:
        return -C0 * _jacobi_off(min(n, nprime), mu, nu)
    return 0.0


def _q_bracket(k, s, tau_sq):
    return (k + s / 2) ** 2 - tau_sq


def _q_diag(n, mu, nu, tau_sq):
    s = mu + nu
    if n == 0:
        return (nu + 1) / (s + 2) * _q_bracket(1, s, tau_sq)
    return (-n * (n + mu) / (2 * n + s)
            + (2 * n * (n + s + 1) + s * (nu + 1)) / ((2 * n + s) * (2 * n + s + 2))
            * _q_bracket(n + 1, s, tau_sq))


def matrix_elements_case_b(n, nprime, bp, tau_sq, C1):
    """Entry (n, n') of <chi_n| H_theta - E_theta |chi_n'> for case B.

    tau^2 = (gamma + 1/2)^2 and C1 = m^2 + C_hat - C.
    """
    mu, nu = bp.mu, bp.nu
    s = mu + nu
    if n == nprime:
        return C1 / 4 - ((nu + 1) / 2) ** 2 + _q_diag(n, mu, nu, tau_sq)
    if abs(n - nprime) == 1:
        k = min(n, nprime)
        return _jacobi_off(k, mu, nu) * _q_bracket(k + 1, s, tau_sq)
    return 0.0


def matrix_elements_case_c(n, nprime, bp, tau_sq, C2):
    """Case C entry, obtained from case B by mu <-> nu and x -> -x."""
    mirrored = AngularBasisParams(bp.nu, bp.mu, bp.beta, bp.alpha, bp.m, AngularCase.B,
                                  bp.special_branch, C2)
    sign = -1.0 if (n + nprime) % 2 else 1.0
    return sign * matrix_elements_case_b(n, nprime, mirrored, tau_sq, C2)


def angular_matrix(case, bp, N, gamma, C0=0.0):
    """Dense N x N block of the angular representation."""
    tau_sq = (gamma + 0.5) ** 2
    out = np.zeros((N, N))
    for n in range(N):
        for k in range(max(0, n - 1), min(N, n + 2)):
            if case in (AngularCase.A, AngularCase.DIAGONAL):
                out[n, k] = matrix_elements_case_a(n, k, bp, gamma, C0)
            elif case is AngularCase.B:
                out[n, k] = matrix_elements_case_b(n, k, bp, tau_sq, bp.c_aux)
            else:
                out[n, k] = matrix_elements_case_c(n, k, bp, tau_sq, bp.c_aux)
    return out


# --- H and Q families ------------------------------------------------------

def log_f_factor(n, mu, nu):
    """log k_n, where f_n = k_n H_n (or k_n Q_n) is orthonormal.

    k_n^2 = (2n+mu+nu+1) Gamma(n+1) Gamma(n+mu+nu+1) / (Gamma(n+mu+1) Gamma(n+nu+1))
    """
    return 0.5 * ((mu + nu + 1) * LOG2 - orthopoly.jacobi_log_norm(n, orthopoly.JacobiParams(mu, nu)))


def f_seed(mu, nu):
    """Orthonormal seed f_0 that corresponds to H_0 = Q_0 = 1."""
    return math.exp(log_f_factor(0, mu, nu))


def h_recurrence(n, sigma, mu, nu):
    """(a, c, d) of ``z H_n = a H_n + c H_{n-1} + d H_{n+1}``.

    The Jacobi recurrence with sigma (n + (mu+nu+1)/2)^2 added to the
    diagonal; sigma = 0 is the Jacobi case exactly.
    """
    a, c, d = orthopoly.jacobi_recurrence(n, mu, nu)
    return a + sigma * (n + (mu + nu + 1) / 2) ** 2, c, d


def q_recurrence(n, tau_sq, mu, nu):
    """(a, c, d) of ``z Q_n = a Q_n + c Q_{n-1} + d Q_{n+1}``."""
    s = mu + nu
    a = _q_diag(n, mu, nu, tau_sq)
    c = 0.0 if n == 0 else (n + mu) * (n + nu) / ((2 * n + s) * (2 * n + s + 1)) * _q_bracket(n, s, tau_sq)
    d = (n + 1) * (n + s + 1) / ((2 * n + s + 1) * (2 * n + s + 2)) * _q_bracket(n + 1, s, tau_sq)
    return a, c, d


def _poly_table(nmax, rec, z):
    z = np.asarray(z, dtype=float)
    out = np.empty((nmax + 1,) + z.shape)
    out[0] = 1.0
    prev = np.zeros_like(z)
    for n in range(nmax):
        a, c, d = rec(n)
        if d == 0:
            raise StructuralError(f"leading recursion coefficient vanishes at n = {n}", index=n)
        out[n + 1] = ((z - a) * out[n] - c * prev) / d
        prev = out[n]
    return out


def h_table(nmax, sigma, mu, nu, z):
    return _poly_table(nmax, lambda n: h_recurrence(n, sigma, mu, nu), z)


def q_table(nmax, tau_sq, mu, nu, z):
    return _poly_table(nmax, lambda n: q_recurrence(n, tau_sq, mu, nu), z)


def h_poly(n, sigma, mu, nu, z):
    """H_n^sigma(z; mu, nu) from its recursion with H_0 = 1."""
    v = h_table(n, sigma, mu, nu, z)[n]
    return v if np.ndim(z) else float(v)


def q_poly(n, tau_sq, mu, nu, z):
    """Q_n^tau(z; mu, nu) from its recursion with Q_0 = 1."""
    v = q_table(n, tau_sq, mu, nu, z)[n]
    return v if np.ndim(z) else float(v)


def _ratio(n, mu, nu):
    # k_n / k_{n+1}
    return math.exp(log_f_factor(n, mu, nu) - log_f_factor(n + 1, mu, nu))


def h_chain(sigma, mu, nu):
    """Orthonormal chain of the H family; seed and mass follow H_0 = 1."""
    orthopoly.JacobiParams(mu, nu)

    def provider(n):
        a, _, d = h_recurrence(n, sigma, mu, nu)
        return a, d * _ratio(n, mu, nu)

    return RecursionCoeffs(provider, f0=f_seed(mu, nu), name="H",
                           params={"sigma": sigma, "mu": mu, "nu": nu})


def q_chain(tau_sq, mu, nu):
    """Orthonormal chain of the Q family.

    Off-diagonal entries are taken positive; this flips the sign of some
    f_n relative to k_n Q_n but leaves the measure unchanged.
    """
    orthopoly.JacobiParams(mu, nu)

    def provider(n):
        a, _, d = q_recurrence(n, tau_sq, mu, nu)
        return a, abs(d) * _ratio(n, mu, nu)

    return RecursionCoeffs(provider, f0=f_seed(mu, nu), name="Q",
                           params={"tau_sq": tau_sq, "mu": mu, "nu": nu})


def _wilson_params(tau_sq, mu, nu):
    tau = math.sqrt(tau_sq)
    return (mu + 1) / 2 - tau, (mu + 1) / 2 + tau, (nu + 1) / 2


def q_weight(z, tau_sq, mu, nu):
    """Closed-form orthogonality measure of the Q family (unit total mass).

    The orthonormal Q chain coincides with the Wilson chain with
    parameters a = (mu+1)/2 - tau, b = (mu+1)/2 + tau, c = d = (nu+1)/2,
    shifted so that z = ((nu+1)/2)^2 + x^2.  The absolutely continuous part
    lives on z > ((nu+1)/2)^2; for a < 0 there are point masses at
    z_k = ((nu+1)/2)^2 - (a+k)^2 for every k with a + k < 0.  A positive
    measure needs tau < (mu+nu)/2 + 1.

    Returns
    -------
    rho : ndarray
        Density of the continuous part at ``z``.
    masses : list of (z_k, w_k)
    """
    if tau_sq < 0:
        raise ParameterDomainError("tau^2 must be non-negative")
    a, b, c = _wilson_params(tau_sq, mu, nu)
    if not a + c > 0:
        raise ParameterDomainError(
            f"tau = {math.sqrt(tau_sq):g} >= (mu+nu)/2 + 1: the Q family has no positive measure")
    log_h0 = (gammaln(a + b) + 2 * gammaln(a + c) + 2 * gammaln(b + c) + gammaln(2 * c)
              - gammaln(a + b + 2 * c))
    z = np.asarray(z, dtype=float)
    x = np.sqrt(np.clip(z - c * c, 0.0, None))
    inside = x > 0
    xs = np.where(inside, x, 1.0)
    lw = (2 * (loggamma(a + 1j * xs) + loggamma(b + 1j * xs)).real + 4 * loggamma(c + 1j * xs).real
          - 2 * loggamma(2j * xs).real)
    rho = np.where(inside, np.exp(lw - log_h0) / (4 * math.pi * xs), 0.0)
    masses = []
    k = 0
    while a + k < 0:
        log_base = (gammaln(a + b) + 2 * gammaln(a + c) + gammaln(b - a) + 2 * gammaln(c - a)
                    - gammaln(-2 * a))
        ratio = 1.0
        for j in range(k):
            ratio *= ((2 * a + j) * (a + 1 + j) * (a + b + j) * (a + c + j) ** 2
                      / ((a + j) * (a - b + 1 + j) * (a - c + 1 + j) ** 2 * (j + 1)))
        masses.append((c * c - (a + k) ** 2, math.exp(log_base - log_h0) * ratio))
        k += 1
    return (rho if rho.ndim else float(rho)), masses


# --- angular series ----------------------------------------------------------

def spectral_variable(case, bp, gamma, C0=0.0):
    """Spectral argument of the coefficient polynomials and their parameter.

    Returns ``(z, sigma)`` for case A with sigma = -1/C0, and
    ``(z, tau_sq)`` for cases B and C.
    """
    if case in (AngularCase.A, AngularCase.DIAGONAL):
        if C0 == 0:
            raise RegimeError("the H-series needs C0 != 0; use the diagonal representation")
        sigma = -1.0 / C0
        return sigma * (gamma + 0.5) ** 2, sigma
    tau_sq = (gamma + 0.5) ** 2
    if case is AngularCase.B:
        return ((bp.nu + 1) / 2) ** 2 - bp.c_aux / 4, tau_sq
    return ((bp.mu + 1) / 2) ** 2 - bp.c_aux / 4, tau_sq


def series_coefficients(case, bp, n_max, z, param):
    """Coefficients f_n of chi_n in the angular series, n = 0 .. n_max.

    ``param`` is sigma for case A and tau^2 for cases B and C.  The
    coefficients are k_n H_n(z) or k_n Q_n(z), with the (-1)^n factor and
    the mu <-> nu swap for case C.
    """
    if n_max < 0:
        raise QuantumNumberError("empty series: no admissible n for this m")
    k = np.exp([log_f_factor(n, bp.mu, bp.nu) for n in range(n_max + 1)])
    if case in (AngularCase.A, AngularCase.DIAGONAL):
        return k * h_table(n_max, param, bp.mu, bp.nu, z)
    if case is AngularCase.B:
        return k * q_table(n_max, param, bp.mu, bp.nu, z)
    sign = (-1.0) ** np.arange(n_max + 1)
    return sign * k * q_table(n_max, param, bp.nu, bp.mu, z)


def series_norm_sq(bp, coeffs):
    """L^2(dx) norm squared of sum_n coeffs[n] chi_n, exact by Gauss-Jacobi."""
    ea, eb = bp.weight_exponents
    nodes, weights = orthopoly.gauss_jacobi(len(coeffs) + 2, ea, eb)
    P = orthopoly.jacobi_table(len(coeffs) - 1, orthopoly.JacobiParams(bp.mu, bp.nu), nodes)
    A = np.exp([_log_A(n, bp.mu, bp.nu) for n in range(len(coeffs))])
    vals = (coeffs * A) @ P
    return float(weights @ vals ** 2)


def theta_series(case, bp, n_max, z, theta, param, rho_value=None):
    """Angular series sum_{n <= n_max} f_n(z) chi_n(cos theta).

    Parameters
    ----------
    case : AngularCase
    bp : AngularBasisParams
    n_max : int
        Last term, N_m from the book.
    z : float
        Spectral variable.
    theta : float or array
    param : float
        sigma (case A) or tau^2 (cases B, C).
    rho_value : float, optional
        Density at z; the series is then scaled by sqrt(rho_value).  When
        omitted the series is scaled to unit L^2 norm in x.
    """
    coeffs = series_coefficients(case, bp, n_max, z, param)
    x = np.cos(np.asarray(theta, dtype=float))
    vals = coeffs @ chi_table(n_max, bp, x).reshape(n_max + 1, -1)
    vals = vals.reshape(np.shape(x))
    if rho_value is None:
        scale = 1.0 / math.sqrt(series_norm_sq(bp, coeffs))
    else:
        if rho_value < 0:
            raise ParameterDomainError("density value must be non-negative")
        scale = math.sqrt(rho_value)
    out = scale * vals
    return out if np.ndim(theta) else float(out)


def diagonal_gamma(n, bp):
    """gamma^+ and gamma^- that diagonalize the C0 = 0 representation."""
    g = n + (bp.mu + bp.nu + 1) / 2
    return g - 0.5, -g - 0.5


def diagonal_theta(n, m, pot, x, allow_special=False):
    """Diagonal-representation angular state chi_n(x; mu_m, nu_m).

    Returns ``(value, gamma_plus, gamma_minus)``.
    """
    if pot.C0 != 0:
        raise RegimeError("the diagonal representation requires C0 = 0")
    bp = basis_params(AngularCase.DIAGONAL, pot, m, allow_special=allow_special)
    gp, gm = diagonal_gamma(n, bp)
    return chi_eval(n, bp, x), gp, gm


def phi_component(m, phi):
    """Azimuthal factor exp(i m phi) / sqrt(2 pi)."""
    return np.exp(1j * m * np.asarray(phi, dtype=float)) / math.sqrt(2 * math.pi)


def azimuthal_energy(m):
    return m * m / 2


def gamma_from_energy(E_theta, branch="plus"):
    """Invert 2 E_theta = gamma (gamma + 1) on the chosen branch."""
    disc = 0.25 + 2 * E_theta
    if disc < 0:
        raise ParameterDomainError("E_theta must be >= -1/8 for real gamma")
    r = math.sqrt(disc)
    return -0.5 + r if branch == "plus" else -0.5 - r


def energy_from_gamma(gamma):
    return gamma * (gamma + 1) / 2

