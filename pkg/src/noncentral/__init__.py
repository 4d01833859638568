"""Tridiagonal-representation solutions of the 3D Schrödinger equation.

Non-central potentials of the form

    V(r, theta) = V(r) + [C_hat + C cos(theta)] / (2 r^2 sin^2(theta)) - C0 cos(theta) / (2 r^2)

with a Coulomb or oscillator V(r): bound spectra, scattering and bound
wavefunction series, the orthogonal polynomials that arise as expansion
coefficients, and their weight functions.
"""
__version__ = "0.1.0"

from .errors import (BelowBarrierError, ImaginaryParameterError, NoBoundStatesError,  # noqa: E402
                     NoncentralError, ParameterDomainError, PoleProximityError,
                     QuantumNumberError, RegimeError, StructuralError)
from .chain import RecursionCoeffs  # noqa: E402
from .recursion import (DensityEstimate, TerminatorParams, asymptotic_coeffs,  # noqa: E402
                        density_cf, density_quadrature, generate_polynomials,
                        greens_function, terminator)
from .angular import AngularCase, AngularPotentialParams  # noqa: E402
from .radial import RadialPotential  # noqa: E402
from .assembly import Regime, SolutionSpaceDescriptor, bound_state, classify  # noqa: E402

__all__ = [
    "__version__", "NoncentralError", "ParameterDomainError", "ImaginaryParameterError",
    "QuantumNumberError", "NoBoundStatesError", "BelowBarrierError", "RegimeError",
    "StructuralError", "PoleProximityError", "RecursionCoeffs", "DensityEstimate",
    "TerminatorParams", "asymptotic_coeffs", "density_cf", "density_quadrature",
    "generate_polynomials", "greens_function", "terminator", "AngularCase",
    "AngularPotentialParams", "RadialPotential", "Regime", "SolutionSpaceDescriptor",
    "bound_state", "classify",
]
