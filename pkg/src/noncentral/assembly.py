"""Complete solutions psi(r, theta, phi) = r^{-1} R(r) Theta(theta) Phi(phi).

Parameter space splits by the angular couplings: C0 != 0 uses the
H-series in the angular sector, C0 = 0 uses either the diagonal
representation or one of the two Q-series cases.  Also here: the
Ĉ = C = 0, C0 != 0 closed-form states and the Aharonov-Bohm plus
monopole application.
"""
from dataclasses import dataclass, field
import enum
import math
from typing import Callable, Optional

import numpy as np
from scipy.special import roots_genlaguerre, roots_legendre

from . import angular, radial
from .angular import AngularCase, AngularPotentialParams
from .errors import (BelowBarrierError, NoBoundStatesError, ParameterDomainError,
                     QuantumNumberError, RegimeError)
from .radial import RadialKind, RadialPotential

__all__ = [
    "Regime", "classify", "SolutionSpaceDescriptor", "CompleteState", "bound_state",
    "scattering_state", "enumerate_bound_spectrum", "norm_3d", "overlap_3d",
    "special_angular", "special_scattering_psi", "special_bound_psi", "special_bound_state",
    "abm_potential_map", "abm_nu", "abm_spectrum", "abm_radial", "abm_levels",
]


class Regime(enum.Enum):
    C0_NONZERO = "C0_NONZERO"
    DIAG_A = "DIAG_A"
    TRIDIAG_B = "TRIDIAG_B"
    TRIDIAG_C = "TRIDIAG_C"


_CASE = {Regime.C0_NONZERO: AngularCase.A, Regime.DIAG_A: AngularCase.DIAGONAL,
         Regime.TRIDIAG_B: AngularCase.B, Regime.TRIDIAG_C: AngularCase.C}


def classify(pot):
    """Solution regime of a set of angular couplings.

    Ties on the boundary Ĉ = |C| go to the diagonal regime.
    """
    if pot.C0 != 0:
        return Regime.C0_NONZERO
    p, q = pot.C_hat + pot.C, pot.C_hat - pot.C
    if (p >= 0) == (q >= 0):
        return Regime.DIAG_A
    return Regime.TRIDIAG_B if p >= 0 else Regime.TRIDIAG_C


@dataclass(frozen=True)
class SolutionSpaceDescriptor:
    """Everything needed to build states of one solution space.

    ``gamma`` is the polar separation label for the series regimes; the
    diagonal regime derives it from (n, m) and ignores this field.
    ``nu_free`` is the free Jacobi parameter of the Q-series regimes.
    """

    pot: AngularPotentialParams
    radial: RadialPotential
    gamma: Optional[float] = None
    branch: str = "plus"
    nu_free: Optional[float] = None
    allow_special: bool = False
    regime: Regime = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "regime", classify(self.pot))
        if self.branch not in ("plus", "minus"):
            raise ParameterDomainError(f"branch must be 'plus' or 'minus' (got {self.branch!r})")
        if self.regime is not Regime.DIAG_A and self.gamma is None:
            raise ParameterDomainError(f"regime {self.regime.value} needs gamma")
        if self.regime in (Regime.TRIDIAG_B, Regime.TRIDIAG_C) and self.nu_free is None:
            raise ParameterDomainError(f"regime {self.regime.value} needs the free Jacobi parameter")

    @property
    def case(self):
        return _CASE[self.regime]

    @property
    def book(self):
        """Admissible (n, m) for the series regimes; None in the diagonal regime."""
        if self.regime is Regime.DIAG_A:
            return None
        return angular.allowed_quantum_numbers(self.case, self.pot, self.gamma, self.nu_free)


@dataclass(frozen=True, eq=False)
class CompleteState:
    """An assembled state with separable radial and angular parts.

    ``radial_fn(r)`` returns R(r); ``angular_fn(theta, phi)`` returns the
    full angular factor Theta * Phi (or a sum of such products).
    ``measure`` names the radial variable used for quadrature and
    ``power`` the exponent of that variable in |R|^2 dr near the origin,
    so the radial Gauss rule integrates bound states exactly.
    """

    labels: dict
    energy: Optional[float]
    radial_fn: Callable
    angular_fn: Callable
    scale: float
    measure: str = "linear"
    diagnostics: dict = field(default_factory=dict)
    power: float = 0.0

    def evaluate(self, r, theta, phi):
        r = np.asarray(r, dtype=float)
        return self.radial_fn(r) / r * self.angular_fn(theta, phi)

    def psi2(self, r, theta, phi):
        return np.abs(self.evaluate(r, theta, phi)) ** 2


# --- quadrature ------------------------------------------------------------

def _radial_rule(state, nr):
    # nodes/weights for int_0^inf f(r) dr with the t^power e^{-t} weight folded back in
    t, w = roots_genlaguerre(nr, state.power)
    w = np.exp(np.log(w) + t - state.power * np.log(t))
    if state.measure == "linear":
        return t / state.scale, w / state.scale
    # r = sqrt(t)/scale, dr = dt / (2 scale sqrt(t))
    return np.sqrt(t) / state.scale, w / (2 * state.scale * np.sqrt(t))


def _angular_rule(nx, nphi):
    x, wx = roots_legendre(nx)
    phi = 2 * math.pi * np.arange(nphi) / nphi
    return np.arccos(x), wx, phi, np.full(nphi, 2 * math.pi / nphi)


def overlap_3d(s1, s2, nr=128, nx=64, nphi=32):
    """Product-rule estimate of <s1|s2> under d^3r.

    Both states must share their radial measure and scale.
    """
    if s1.measure != s2.measure or s1.scale != s2.scale:
        raise ParameterDomainError("overlap needs states with a common radial rule")
    r, wr = _radial_rule(s1, nr)
    rad = float(np.sum(wr * np.conj(s1.radial_fn(r)) * s2.radial_fn(r)).real)
    th, wx, phi, wphi = _angular_rule(nx, nphi)
    T, P = np.meshgrid(th, phi, indexing="ij")
    ang = np.sum(wx[:, None] * wphi[None, :] * np.conj(s1.angular_fn(T, P)) * s2.angular_fn(T, P))
    return complex(rad * ang)


def norm_3d(state, nr=128, nx=64, nphi=32):
    """Product-rule estimate of the integral of |psi|^2 over all space."""
    return overlap_3d(state, state, nr, nx, nphi).real


# --- generic states ----------------------------------------------------------

def _diag_gamma(desc, n, m):
    bp = angular.basis_params(AngularCase.DIAGONAL, desc.pot, m, allow_special=desc.allow_special)
    gp, gm = angular.diagonal_gamma(n, bp)
    return bp, (gp if desc.branch == "plus" else gm)


def _angular_factor(desc, n, m):
    """Angular callable and gamma for one (n, m)."""
    if n < 0:
        raise QuantumNumberError("n must be non-negative")
    if desc.regime is Regime.DIAG_A:
        bp, gamma = _diag_gamma(desc, n, m)

        def theta_fn(theta):
            return angular.chi_eval(n, bp, np.cos(theta))
    else:
        book = desc.book
        if (n, m) not in book:
            raise QuantumNumberError(
                f"(n={n}, m={m}) is not admissible at gamma={desc.gamma} in regime {desc.regime.value}")
        gamma = desc.gamma
        bp = angular.basis_params(desc.case, desc.pot, m, desc.nu_free, desc.allow_special)
        z, param = angular.spectral_variable(desc.case, bp, gamma, desc.pot.C0)

        def theta_fn(theta):
            return angular.theta_series(desc.case, bp, n, z, theta, param)

    def ang(theta, phi):
        return theta_fn(np.asarray(theta, dtype=float)) * angular.phi_component(m, phi)

    return ang, gamma, bp


def bound_state(desc, k, n, m):
    """Bound state with radial index k, polar index n and azimuthal number m.

    In the series regimes n is the last retained term of the angular
    series and must lie in the book; gamma is fixed by the descriptor.
    """
    ang, gamma, bp = _angular_factor(desc, n, m)
    labels = {"k": k, "n": n, "m": m, "gamma": gamma, "regime": desc.regime.value}
    if desc.radial.kind is RadialKind.COULOMB:
        level = radial.coulomb_bound_spectrum(k, gamma, desc.branch, desc.radial.Z)
        labels["lambda"] = level.lambda_k
        return CompleteState(labels, level.energy, lambda r: radial.coulomb_bound_radial(level, r),
                             ang, level.lambda_k, "linear", power=2 * level.alpha)
    omega = desc.radial.omega
    E = radial.oscillator_spectrum(k, gamma, desc.branch, omega)
    labels["lambda"] = omega
    return CompleteState(labels, E,
                         lambda r: radial.oscillator_bound_radial(k, gamma, desc.branch, omega, r),
                         ang, omega, "quadratic",
                         power=2 * radial.alpha_from_gamma(gamma, desc.branch, "oscillator") - 0.5)


def scattering_state(desc, E, lam, K=100, n=0, m=0, summation="smooth"):
    """Coulomb scattering state at energy E > 0 (energy-normalized radial factor)."""
    if desc.radial.kind is not RadialKind.COULOMB:
        raise RegimeError("scattering states are built for the Coulomb radial potential only")
    ang, gamma, bp = _angular_factor(desc, n, m)
    Z = desc.radial.Z
    _, diag = radial.coulomb_scattering_radial(E, gamma, desc.branch, lam, Z, 1.0, K, summation)

    def rad(r):
        return radial.coulomb_scattering_radial(E, gamma, desc.branch, lam, Z, r, K, summation)[0]

    labels = {"E": E, "n": n, "m": m, "gamma": gamma, "lambda": lam, "K": K,
              "regime": desc.regime.value}
    return CompleteState(labels, E, rad, ang, lam, "linear", diag)


def enumerate_bound_spectrum(desc, max_level, m_max=None):
    """Bound levels as rows (k, n, m, gamma, energy, lambda), sorted by energy.

    Diagonal regime: all (k, n, m) with k + n + |m| - M <= max_level - 1,
    where M is the smallest admissible |m|.  Series regimes: k < max_level
    for every (n, m) in the book.
    """
    rows = []
    if desc.regime is Regime.DIAG_A:
        M = angular.minimum_m(AngularCase.DIAGONAL, desc.pot)
        top = max_level - 1 + M if m_max is None else m_max
        for am in range(M, top + 1):
            for m in sorted({am, -am}):
                for n in range(0, max_level - (am - M)):
                    for k in range(0, max_level - (am - M) - n):
                        s = bound_state(desc, k, n, m)
                        rows.append((k, n, m, s.labels["gamma"], s.energy, s.labels["lambda"]))
    else:
        for n, m in desc.book.entries():
            if m_max is not None and abs(m) > m_max:
                continue
            for k in range(max_level):
                s = bound_state(desc, k, n, m)
                rows.append((k, n, m, s.labels["gamma"], s.energy, s.labels["lambda"]))
    rows.sort(key=lambda row: (row[4], row[0], row[1], row[2]))
    return rows


# --- C_hat = C = 0, C0 != 0 ----------------------------------------------------

def _special_terms(j, eta, C0):
    if C0 == 0:
        raise RegimeError("the closed-form states need C0 != 0")
    if j < 0 or int(j) != j:
        raise QuantumNumberError("j must be a non-negative integer")
    if not 0 <= eta < 1:
        raise ParameterDomainError(f"eta must lie in [0, 1) (got {eta})")
    sigma = -1.0 / C0
    z = sigma * (j + eta + 0.5) ** 2
    return sigma, z


def special_angular(j, eta, C0):
    """Angular factor sum_m Phi_m sum_{n <= j - |m|} f_n chi_n(x; |m|, |m|), unit-normalized.

    The coefficients are the orthonormal H polynomials at mu = nu = |m|.
    """
    sigma, z = _special_terms(j, eta, C0)
    pot = AngularPotentialParams(0.0, 0.0, C0)
    parts = []
    norm_sq = 0.0
    for m in range(-j, j + 1):
        bp = angular.basis_params(AngularCase.A, pot, m)
        coeffs = angular.series_coefficients(AngularCase.A, bp, j - abs(m), z, sigma)
        norm_sq += angular.series_norm_sq(bp, coeffs)
        parts.append((m, bp, coeffs))
    scale = 1.0 / math.sqrt(norm_sq)

    def ang(theta, phi):
        x = np.cos(np.asarray(theta, dtype=float))
        total = 0j
        for m, bp, coeffs in parts:
            chi = angular.chi_table(len(coeffs) - 1, bp, x)
            total = total + np.tensordot(coeffs, chi, axes=1) * angular.phi_component(m, phi)
        return scale * total

    return ang


def special_bound_state(k, j, eta, Z, C0):
    """Closed-form bound state; radial exponent alpha = j + eta + 1."""
    _special_terms(j, eta, C0)
    if not Z < 0:
        raise NoBoundStatesError(f"bound states need Z < 0 (got {Z})")
    level = radial.coulomb_bound_spectrum(k, j + eta, "plus", Z)
    labels = {"k": k, "j": j, "eta": eta, "C0": C0, "lambda": level.lambda_k}
    return CompleteState(labels, level.energy, lambda r: radial.coulomb_bound_radial(level, r),
                         special_angular(j, eta, C0), level.lambda_k, "linear", power=2 * level.alpha)


def special_bound_psi(k, j, eta, Z, C0, point):
    """Value of the closed-form bound state at ``(r, theta, phi)`` and its energy."""
    s = special_bound_state(k, j, eta, Z, C0)
    return complex(s.evaluate(*point)), s.energy


def special_scattering_psi(j, eta, Z, C0, E, lam, point, K=100, summation="smooth"):
    """Closed-form scattering state at ``(r, theta, phi)`` (energy-normalized radial part)."""
    _special_terms(j, eta, C0)
    r, theta, phi = point
    R, _ = radial.coulomb_scattering_radial(E, j + eta, "plus", lam, Z, r, K, summation)
    return complex(R / r * special_angular(j, eta, C0)(theta, phi))


# --- Aharonov-Bohm plus monopole ----------------------------------------------

def abm_potential_map(a, b, zeta, m, Z):
    """Angular couplings and barrier induced by the vector potential.

    Returns a dict with C_hat, C, C0 (= 0), the barrier coefficient
    B = -zeta^2 b^2 of the 1/(2 r^2) term, and Z.
    """
    C_hat = zeta * (zeta * (a * a + b * b) - 2 * m * a)
    C = 2 * zeta * b * (m - zeta * a)
    return {"C_hat": C_hat, "C": C, "C0": 0.0, "B": -(zeta * b) ** 2, "Z": Z}


def _abm_gamma(n, m, a, b, zeta):
    mu = abs(m - zeta * (a - b))
    nu = abs(m - zeta * (a + b))
    return n + (mu + nu) / 2, mu, nu


def abm_nu(n, m, a, b, zeta):
    """Effective radial index -1/2 + sqrt((gamma + 1/2)^2 - zeta^2 b^2)."""
    gamma, _, _ = _abm_gamma(n, m, a, b, zeta)
    rad = (gamma + 0.5) ** 2 - (zeta * b) ** 2
    if abs(gamma + 0.5) < abs(zeta * b):
        raise BelowBarrierError(n, m)
    return -0.5 + math.sqrt(max(rad, 0.0)), gamma


def abm_spectrum(k, n, m, Z, zeta, a, b):
    """Energy and length scale of level (k, n, m).

    E = -Z^2 / (2 (k + nu_nm + 1)^2),  lambda = 2|Z| / (k + nu_nm + 1).
    """
    if not Z < 0:
        raise NoBoundStatesError(f"bound states need Z < 0 (got {Z})")
    if n < 0 or k < 0:
        raise QuantumNumberError("k and n must be non-negative")
    nu, gamma = abm_nu(n, m, a, b, zeta)
    d = k + nu + 1
    return {"energy": -Z * Z / (2 * d * d), "lambda": 2 * abs(Z) / d, "nu": nu, "gamma": gamma,
            "k": k, "n": n, "m": m}


def abm_radial(level, r):
    """Unit-normalized radial state (lambda r)^{nu+1} e^{-lambda r/2} L_k^{2 nu + 1}(lambda r)."""
    bl = radial.BoundLevel(level["k"], level["energy"], level["lambda"], level["nu"] + 1)
    return radial.coulomb_bound_radial(bl, r)


def abm_levels(Z, zeta, a, b, k_max, n_max, m_range):
    """Admissible levels over a grid of quantum numbers, plus the rejected (n, m)."""
    levels, rejected = [], []
    for m in m_range:
        for n in range(n_max + 1):
            try:
                for k in range(k_max + 1):
                    levels.append(abm_spectrum(k, n, m, Z, zeta, a, b))
            except BelowBarrierError as exc:
                rejected.append((exc.n, exc.m))
    levels.sort(key=lambda lv: (lv["energy"], lv["k"], lv["n"], lv["m"]))
    return levels, rejected
