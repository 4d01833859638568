"""Three-term recursion machinery.

Polynomial generation from an arbitrary chain {a_n, b_n}, the continued
fraction resolvent with a square-root terminator, and two estimators of
the orthogonality density: the discontinuity of the resolvent across the
real axis and a kernel-smoothed Gauss rule.
"""
from dataclasses import dataclass, field
import math

import numpy as np
from scipy.integrate import trapezoid
from scipy.special import erf

from .chain import RecursionCoeffs
from .errors import PoleProximityError, StructuralError
from .orthopoly import quadrature_from_recursion

__all__ = [
    "RecursionCoeffs", "TerminatorParams", "DensityEstimate", "AsymptoticReport",
    "generate_polynomials", "terminator", "greens_function", "density_cf",
    "density_quadrature", "asymptotic_coeffs", "local_terminator",
]


@dataclass(frozen=True)
class TerminatorParams:
    a_inf: float
    b_inf: float

    def __post_init__(self):
        if not self.b_inf >= 0:
            raise StructuralError(f"terminator needs b_inf >= 0 (got {self.b_inf})")

    @property
    def band(self):
        return self.a_inf - 2 * self.b_inf, self.a_inf + 2 * self.b_inf


@dataclass(frozen=True, eq=False)
class DensityEstimate:
    grid: np.ndarray
    rho: np.ndarray
    support: tuple
    method: str
    mass: float = 1.0
    diagnostics: dict = field(default_factory=dict, compare=False)

    def integral(self):
        """Trapezoid integral of the density over the grid."""
        return float(trapezoid(self.rho, self.grid))

    def normalized(self):
        """Density rescaled to unit total mass."""
        return self.rho / self.mass


@dataclass(frozen=True)
class AsymptoticReport:
    N: int
    a_N: float
    b_N: float
    a_over_N2: float
    b_over_N2: float
    a_growth: float
    b_growth: float
    kind: str
    a_inf: float = float("nan")
    b_inf: float = float("nan")


def generate_polynomials(c, f0, z, N):
    """Orthonormal polynomials f_0 .. f_N of a chain by forward recursion.

    Parameters
    ----------
    c : RecursionCoeffs
    f0 : float
        Seed value; ``1/sqrt(mass)`` gives polynomials orthonormal under the
        chain's measure.
    z : scalar or array, real or complex
    N : int
        Highest degree.

    Returns
    -------
    ndarray of shape ``(N + 1,) + shape(z)``
    """
    if N < 0:
        raise StructuralError("N must be non-negative")
    z = np.asarray(z)
    dtype = np.result_type(z.dtype, float)
    out = np.empty((N + 1,) + z.shape, dtype=dtype)
    out[0] = f0
    prev = np.zeros(z.shape, dtype=dtype)
    b_prev = 0.0
    for n in range(N):
        a, b = c.coeff(n)
        if b == 0:
            raise StructuralError(f"b_{n} = 0 stops the recursion", index=n)
        out[n + 1] = ((z - a) * out[n] - b_prev * prev) / b
        prev = out[n]
        b_prev = b
    return out


def terminator(z, t, allow_degenerate=False):
    """Tail of the continued fraction for constant coefficients.

    Solves ``T = b^2 / (z - a - T)`` on the branch that decays like
    ``b^2 / z`` at infinity.  This branch has Im T <= 0 in the upper half
    plane, so the resolvent ``-1 / (z - a - T)`` has a positive imaginary
    part there.
    """
    z = np.asarray(z, dtype=complex)
    if t.b_inf == 0:
        if not allow_degenerate:
            raise StructuralError("degenerate terminator (b_inf = 0)")
        return np.zeros_like(z) if z.ndim else 0j
    w = z - t.a_inf
    # product of principal roots keeps the cut on the band [a - 2b, a + 2b]
    T = 0.5 * (w - np.sqrt(w - 2 * t.b_inf) * np.sqrt(w + 2 * t.b_inf))
    return T if np.ndim(T) else complex(T)


def local_terminator(c, N):
    """Terminator built from the coefficients at the truncation depth."""
    a_N, _ = c.coeff(N)
    _, b_last = c.coeff(N - 1)
    return TerminatorParams(a_N, abs(b_last))


def _continued_fraction(a, b, z, tail):
    """Bottom-up evaluation; also returns the first zero-denominator level per point."""
    bad = np.full(z.shape, -1)
    for n in range(len(a) - 1, -1, -1):
        den = z - a[n] - tail
        hit = (den == 0) & (bad < 0)
        bad[hit] = n
        den = np.where(den == 0, np.nan, den)
        with np.errstate(invalid="ignore"):
            tail = b[n - 1] ** 2 / den if n else -1.0 / den
    return tail, bad


def greens_function(c, z, N, t=None, return_diagnostics=False):
    """Depth-N continued fraction ``-1/(z - a_0 - b_0^2/(z - a_1 - ...))``.

    The innermost level is closed with the terminator ``t`` (or with zero
    when ``t`` is None).  Evaluated bottom-up; ``z`` may be an array.
    """
    if N < 1:
        raise StructuralError("continued-fraction depth must be >= 1")
    z = np.asarray(z, dtype=complex)
    a, b = c.arrays(N)
    tail = np.zeros_like(z) if t is None else np.asarray(terminator(z, t), dtype=complex)
    G, bad = _continued_fraction(a, b, z, tail)
    if np.any(bad >= 0):
        level = int(bad[bad >= 0].max())
        raise PoleProximityError(f"zero denominator at level {level}", index=level)
    G = G if G.ndim else complex(G)
    if not return_diagnostics:
        return G
    diag = {}
    if t is not None:
        a_N, _ = c.coeff(N)
        diag = {"delta_a": abs(a_N - t.a_inf), "delta_b": abs(b[N - 1] - t.b_inf)}
    return G, diag


def density_cf(c, grid, N, t=None, eps=None):
    """Density as (mass / pi) Im G(z + i eps) on a real grid.

    The resolvent of an orthonormal chain has unit spectral mass; it is
    scaled by the chain mass so both estimators describe the same measure.
    With ``t`` None a local terminator at depth N is used.  ``eps``
    defaults to ``1e-6 * max(1, |b_inf|)``.  Negative values produced by the
    finite offset are clipped and reported; points landing exactly on a
    pole are set to zero and listed in the diagnostics.
    """
    grid = np.asarray(grid, dtype=float)
    if np.any(np.diff(grid) < 0):
        raise StructuralError("density grid must be sorted")
    if t is None:
        t = local_terminator(c, N)
    if eps is None:
        eps = 1e-6 * max(1.0, abs(t.b_inf))
    z = grid + 1j * eps
    a, b = c.arrays(N)
    G, bad = _continued_fraction(a, b, z, np.asarray(terminator(z, t, allow_degenerate=True), dtype=complex))
    rho = np.where(bad >= 0, 0.0, c.mass * G.imag / math.pi)
    poles = [(int(i), int(bad[i])) for i in np.flatnonzero(bad >= 0)]
    neg = rho < 0
    clip_mass = float(-trapezoid(np.where(neg, rho, 0.0), grid)) + 0.0 if grid.size > 1 else 0.0
    rho = np.where(neg, 0.0, rho)
    a_N, _ = c.coeff(N)
    diag = {"eps": eps, "clipped_points": int(neg.sum()), "clip_mass": clip_mass,
            "pole_points": poles, "delta_a": abs(a_N - t.a_inf),
            "delta_b": abs(b[N - 1] - t.b_inf), "depth": N}
    return DensityEstimate(grid, rho, t.band, "continued-fraction", c.mass, diag)


def _bump_mass(h):
    # integral of the truncated, shifted Gaussian exp(-u^2/2) - exp(-9/2) over |u| <= 3
    return h * (math.sqrt(2 * math.pi) * erf(3 / math.sqrt(2)) - 6 * math.exp(-4.5))


def density_quadrature(c, N, bandwidth, grid=None, points=2001):
    """Kernel-smoothed Gauss rule of size N.

    Each node carries its Gauss weight spread over a Gaussian bump of width
    ``bandwidth``, truncated at three widths and shifted to vanish there, so
    the estimate integrates to the chain mass exactly and is supported on
    ``[min node - 3 h, max node + 3 h]``.
    """
    if bandwidth <= 0:
        raise StructuralError("bandwidth must be positive")
    nodes, weights = quadrature_from_recursion(c, N)
    lo, hi = nodes.min() - 3 * bandwidth, nodes.max() + 3 * bandwidth
    grid = np.linspace(lo, hi, points) if grid is None else np.asarray(grid, dtype=float)
    u = (grid[:, None] - nodes[None, :]) / bandwidth
    kern = np.where(np.abs(u) <= 3, np.exp(-0.5 * u ** 2) - math.exp(-4.5), 0.0)
    rho = kern @ weights / _bump_mass(bandwidth)
    diag = {"nodes": nodes, "weights": weights, "bandwidth": bandwidth, "depth": N}
    return DensityEstimate(grid, rho, (lo, hi), "quadrature-histogram", c.mass, diag)


def _growth(x_half, x_full):
    if abs(x_half) < 1e-12 or abs(x_full) < 1e-12:
        return 0.0
    return math.log(abs(x_full) / abs(x_half)) / math.log(2)


def asymptotic_coeffs(c, N):
    """Large-N behaviour of a chain.

    The growth exponent of each sequence is estimated between N/2 and N.
    Exponents below one half classify the chain as ``bounded-band``
    (limits reported); otherwise it is ``unbounded``.
    """
    if N < 10:
        raise StructuralError("asymptotic report needs N >= 10")
    a_N, b_N = c.coeff(N)
    a_h, b_h = c.coeff(N // 2)
    pa = _growth(a_h, a_N) * math.log(2) / math.log(N / (N // 2))
    pb = _growth(b_h, b_N) * math.log(2) / math.log(N / (N // 2))
    if pa < 0.5 and pb < 0.5:
        kind, a_inf, b_inf = "bounded-band", a_N, b_N
    else:
        kind, a_inf, b_inf = "unbounded", float("nan"), float("nan")
    return AsymptoticReport(N, a_N, b_N, a_N / N ** 2, b_N / N ** 2, pa, pb, kind, a_inf, b_inf)
