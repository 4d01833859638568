"""Radial sector: Laguerre basis, Coulomb and oscillator representations.

The radial equation is expanded in

    xi_n(y) = B_n y^alpha e^{-y/2} L_n^nu(y)

with y = lambda r (Coulomb) or y = (lambda r)^2 (oscillator).  In both
cases the wave operator is tridiagonal.  Bound states follow from making
it diagonal; Coulomb scattering states are series whose coefficients are
Meixner-Pollaczek polynomials in the charge variable.
"""
from dataclasses import dataclass
import enum
import math

import numpy as np
from scipy.special import gammaln

from . import orthopoly
from .errors import NoBoundStatesError, ParameterDomainError

__all__ = [
    "RadialKind", "Coordinate", "RadialPotential", "RadialBasisParams", "BoundLevel",
    "xi_eval", "alpha_from_gamma", "coulomb_matrix", "coulomb_matrix_block",
    "coulomb_bound_spectrum", "coulomb_bound_radial", "coulomb_scattering_radial",
    "mp_angle", "summation_window", "oscillator_matrix", "oscillator_matrix_block",
    "oscillator_spectrum", "oscillator_bound_radial",
]


class RadialKind(enum.Enum):
    COULOMB = "coulomb"
    OSCILLATOR = "oscillator"


class Coordinate(enum.Enum):
    LINEAR = "linear"
    QUADRATIC = "quadratic"


@dataclass(frozen=True)
class RadialPotential:
    kind: RadialKind
    strength: float

    def __post_init__(self):
        if not math.isfinite(self.strength):
            raise ParameterDomainError("radial strength must be finite")
        if self.kind is RadialKind.OSCILLATOR and not self.strength > 0:
            raise ParameterDomainError(f"oscillator frequency must be positive (got {self.strength})")

    @classmethod
    def coulomb(cls, Z):
        return cls(RadialKind.COULOMB, float(Z))

    @classmethod
    def oscillator(cls, omega):
        return cls(RadialKind.OSCILLATOR, float(omega))

    @property
    def Z(self):
        return self.strength

    @property
    def omega(self):
        return self.strength


@dataclass(frozen=True)
class RadialBasisParams:
    lam: float
    alpha: float
    nu: float
    coordinate: Coordinate = Coordinate.LINEAR

    def __post_init__(self):
        if not self.lam > 0:
            raise ParameterDomainError(f"lambda must be positive (got {self.lam})")
        if not self.alpha > 0:
            raise ParameterDomainError(f"alpha must be positive (got {self.alpha})")
        if not self.nu > -1:
            raise ParameterDomainError(f"nu must exceed -1 (got {self.nu})")

    @classmethod
    def coulomb(cls, lam, alpha):
        return cls(lam, alpha, 2 * alpha - 1, Coordinate.LINEAR)

    @classmethod
    def oscillator(cls, lam, alpha):
        return cls(lam, alpha, 2 * alpha - 0.5, Coordinate.QUADRATIC)


@dataclass(frozen=True)
class BoundLevel:
    k: int
    energy: float
    lambda_k: float
    alpha: float


def _check_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ParameterDomainError("radial coordinate must be positive")
    return r


def _log_B(n, bp):
    base = math.log(bp.lam) + gammaln(n + 1) - gammaln(n + bp.nu + 1)
    if bp.coordinate is Coordinate.QUADRATIC:
        base += math.log(2.0)
    return 0.5 * base


def _y(bp, r):
    return bp.lam * r if bp.coordinate is Coordinate.LINEAR else (bp.lam * r) ** 2


def xi_eval(n, bp, r):
    """Basis function xi_n at radius r.

    The prefactor is ``sqrt(lam n! / Gamma(n + nu + 1))``, times sqrt(2)
    in the quadratic coordinate so the measure dr is accounted for.
    """
    if n < 0:
        raise ParameterDomainError("basis index must be non-negative")
    r = _check_r(r)
    y = _y(bp, r)
    L = orthopoly.laguerre_table(n, orthopoly.LaguerreParams(bp.nu), y)[n]
    out = np.exp(_log_B(n, bp) + bp.alpha * np.log(y) - y / 2) * L
    return out if out.ndim else float(out)


def _check_branch(branch):
    if branch not in ("plus", "minus"):
        raise ParameterDomainError(f"branch must be 'plus' or 'minus' (got {branch!r})")


def alpha_from_gamma(gamma, branch="plus", case="coulomb"):
    """Radial exponent alpha from the polar separation constant gamma.

    The plus root needs gamma >= 0 and the minus root gamma < -1; the two
    roots of gamma(gamma + 1) give the same alpha.
    """
    _check_branch(branch)
    if branch == "plus" and not gamma >= 0:
        raise ParameterDomainError(f"plus branch needs gamma >= 0 (got {gamma})")
    if branch == "minus" and not gamma < -1:
        raise ParameterDomainError(f"minus branch needs gamma < -1 (got {gamma})")
    a = gamma + 1 if branch == "plus" else -gamma
    if case == "coulomb":
        return float(a)
    if case == "oscillator":
        return float(a) / 2
    raise ParameterDomainError(f"unknown radial case {case!r}")


# --- Coulomb --------------------------------------------------------------

def coulomb_matrix(k, kprime, alpha, lam, E, Z):
    """Entry of (2/lambda^2) <xi_k|H - E|xi_k'> in the Coulomb basis (nu = 2 alpha - 1)."""
    if k == kprime:
        return 2 * (k + alpha) * (0.25 - 2 * E / lam ** 2) + 2 * Z / lam
    if abs(k - kprime) == 1:
        j = min(k, kprime)
        return (0.25 + 2 * E / lam ** 2) * math.sqrt((j + 1) * (j + 2 * alpha))
    return 0.0


def coulomb_matrix_block(N, alpha, lam, E, Z):
    """Dense N x N block of the Coulomb representation."""
    k = np.arange(N, dtype=float)
    M = np.diag(2 * (k + alpha) * (0.25 - 2 * E / lam ** 2) + 2 * Z / lam)
    off = (0.25 + 2 * E / lam ** 2) * np.sqrt((k[:-1] + 1) * (k[:-1] + 2 * alpha))
    return M + np.diag(off, 1) + np.diag(off, -1)


def coulomb_bound_spectrum(k, gamma, branch, Z):
    """Bound level k: lambda_k = -2Z/(k + alpha), E_k = -Z^2 / (2 (k + alpha)^2).

    Both entries of the representation vanish at the returned pair.
    """
    if not Z < 0:
        raise NoBoundStatesError(f"bound states need an attractive Coulomb coupling (Z={Z})")
    if k < 0:
        raise ParameterDomainError("radial index must be non-negative")
    alpha = alpha_from_gamma(gamma, branch, "coulomb")
    return _coulomb_level(k, alpha, Z)


def _coulomb_level(k, alpha, Z):
    lam = -2 * Z / (k + alpha)
    return BoundLevel(int(k), -Z ** 2 / (2 * (k + alpha) ** 2), lam, alpha)


def coulomb_bound_radial(level, r):
    """Unit-normalized bound radial function of a Coulomb level.

    The Laguerre basis with nu = 2 alpha - 1 is orthogonal only under the
    weight y^{nu+1}, so the single-term state carries its own norm
    ``sqrt(lam k! / (2 (k + alpha) Gamma(k + 2 alpha)))``.
    """
    r = _check_r(r)
    k, alpha, lam = level.k, level.alpha, level.lambda_k
    y = lam * r
    L = orthopoly.laguerre_table(k, orthopoly.LaguerreParams(2 * alpha - 1), y)[k]
    log_norm = 0.5 * (math.log(lam) + gammaln(k + 1) - math.log(2 * (k + alpha))
                      - gammaln(k + 2 * alpha))
    out = np.exp(log_norm + alpha * np.log(y) - y / 2) * L
    return out if out.ndim else float(out)


def mp_angle(E, lam):
    """Meixner-Pollaczek angle arccos[(E - lam^2/8) / (E + lam^2/8)]."""
    if not E > 0:
        raise ParameterDomainError(f"scattering needs E > 0 (got {E}); use the bound-state path")
    phi = math.acos((E - lam ** 2 / 8) / (E + lam ** 2 / 8))
    assert 0 < phi < math.pi
    return phi


def summation_window(K, start=0.5):
    """Smooth taper: 1 up to ``start`` of the range, then a C-infinity roll-off to 0 at K + 1."""
    x = np.arange(K + 1) / (K + 1)
    u = (x - start) / (1 - start)

    def h(t):
        return np.where(t > 0, np.exp(-1 / np.where(t > 0, t, 1.0)), 0.0)

    with np.errstate(invalid="ignore"):
        w = h(1 - u) / (h(1 - u) + h(u))
    return np.where(x <= start, 1.0, w)


def coulomb_scattering_radial(E, gamma, branch, lam, Z, r, K=100, summation="smooth",
                              normalization="energy"):
    """Scattering radial function as a Meixner-Pollaczek series.

    The k-th term is ``k!/Gamma(k + 2 alpha) P_k^alpha(-Z/sqrt(2E), phi) xi_k``
    (without the basis prefactor).  Partial sums converge slowly; the
    default ``summation="smooth"`` tapers the last half of the terms with a
    smooth window, ``"partial"`` returns the plain partial sum.

    ``normalization="energy"`` scales by ``sqrt(rho / sqrt(2E))`` with rho
    the Meixner-Pollaczek weight, which makes the result energy-normalized
    (it equals sqrt(2/(pi k)) F_l(eta, k r) with k = sqrt(2E), l = alpha-1).
    ``"lambda"`` uses ``sqrt(lam |Z| rho / (2E)^{3/2})``, and ``"none"``
    leaves the series unscaled.

    Returns
    -------
    value : float or ndarray
    diagnostics : dict
        ``last_term`` (largest magnitude of the final unweighted term),
        ``phi``, ``z_mp``, ``norm`` and the settings used.
    """
    if K < 1:
        raise ParameterDomainError("truncation K must be >= 1")
    if summation not in ("smooth", "partial"):
        raise ParameterDomainError(f"unknown summation {summation!r}")
    if normalization not in ("energy", "lambda", "none"):
        raise ParameterDomainError(f"unknown normalization {normalization!r}")
    if not lam > 0:
        raise ParameterDomainError("lambda must be positive")
    r = _check_r(r)
    phi = mp_angle(E, lam)
    alpha = alpha_from_gamma(gamma, branch, "coulomb")
    z_mp = -Z / math.sqrt(2 * E)
    p = orthopoly.MPParams(alpha, phi)
    P = orthopoly.mp_table(K, p, z_mp)
    y = lam * r
    L = orthopoly.laguerre_table(K, orthopoly.LaguerreParams(2 * alpha - 1), y)
    k = np.arange(K + 1)
    coef = np.exp(gammaln(k + 1) - gammaln(k + 2 * alpha)) * P
    weights = coef if summation == "partial" else coef * summation_window(K)
    envelope = np.exp(alpha * np.log(y) - y / 2)
    series = np.tensordot(weights, L, axes=1) * envelope
    last = np.max(np.abs(coef[-1] * L[-1] * envelope))
    log_rho = float(orthopoly.mp_log_weight(p, z_mp))
    if normalization == "energy":
        norm = math.exp(0.5 * (log_rho - 0.5 * math.log(2 * E)))
    elif normalization == "lambda":
        norm = math.sqrt(lam * abs(Z)) * math.exp(0.5 * (log_rho - 1.5 * math.log(2 * E)))
    else:
        norm = 1.0
    value = norm * series
    diag = {"last_term": float(norm * last), "phi": phi, "z_mp": z_mp, "norm": norm,
            "K": K, "summation": summation, "normalization": normalization, "alpha": alpha}
    return (value if value.ndim else float(value)), diag


# --- oscillator -----------------------------------------------------------

def oscillator_matrix(k, kprime, nu, lam, omega, E):
    """Entry of (2/lambda^2) <xi_k|H - E|xi_k'> in the oscillator basis (nu = 2 alpha - 1/2)."""
    ratio = omega ** 4 / lam ** 4
    if k == kprime:
        return (2 * k + nu + 1) * (ratio + 1) - 2 * E / lam ** 2
    if abs(k - kprime) == 1:
        j = min(k, kprime)
        return -(ratio - 1) * math.sqrt((j + 1) * (j + nu + 1))
    return 0.0


def oscillator_matrix_block(N, nu, lam, omega, E):
    ratio = omega ** 4 / lam ** 4
    k = np.arange(N, dtype=float)
    M = np.diag((2 * k + nu + 1) * (ratio + 1) - 2 * E / lam ** 2)
    off = -(ratio - 1) * np.sqrt((k[:-1] + 1) * (k[:-1] + nu + 1))
    return M + np.diag(off, 1) + np.diag(off, -1)


def oscillator_spectrum(k, gamma, branch, omega):
    """E = omega^2 (2k + gamma + 3/2) (plus) or omega^2 (2k - gamma + 1/2) (minus)."""
    if not omega > 0:
        raise ParameterDomainError("oscillator frequency must be positive")
    if k < 0:
        raise ParameterDomainError("radial index must be non-negative")
    alpha = alpha_from_gamma(gamma, branch, "oscillator")
    return float(omega ** 2 * (2 * k + 2 * alpha + 0.5))


def oscillator_bound_radial(k, gamma, branch, omega, r):
    """Unit-normalized oscillator bound state: the basis element xi_k at lambda = omega."""
    if not omega > 0:
        raise ParameterDomainError("oscillator frequency must be positive")
    alpha = alpha_from_gamma(gamma, branch, "oscillator")
    return xi_eval(k, RadialBasisParams.oscillator(omega, alpha), r)
