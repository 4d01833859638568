import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from noncentral import orthopoly, recursion
from noncentral.chain import RecursionCoeffs
from noncentral.errors import PoleProximityError, StructuralError
from noncentral.verify import semicircle


def test_semicircle_from_exact_terminator():
    c = RecursionCoeffs.constant(0.0, 0.5)
    grid = np.linspace(-0.9, 0.9, 181)
    est = recursion.density_cf(c, grid, 10, recursion.TerminatorParams(0.0, 0.5))
    assert np.abs(est.rho - semicircle(grid)).max() < 1e-5
    assert est.support == (-1.0, 1.0)


@settings(max_examples=30, deadline=None)
@given(a=st.floats(-3, 3), b=st.floats(0.05, 3), x=st.floats(-5, 5), y=st.floats(1e-3, 3))
def test_terminator_fixed_point(a, b, x, y):
    t = recursion.TerminatorParams(a, b)
    z = complex(x, y)
    T = recursion.terminator(z, t)
    assert abs(T - b * b / (z - a - T)) < 1e-10 * max(1.0, abs(T))
    assert T.imag <= 1e-14


def test_terminator_decays_at_infinity():
    t = recursion.TerminatorParams(0.2, 0.8)
    z = 1e6 + 1j
    assert abs(recursion.terminator(z, t) * z - 0.64) < 1e-5


def test_degenerate_terminator():
    t = recursion.TerminatorParams(0.0, 0.0)
    with pytest.raises(StructuralError):
        recursion.terminator(1j, t)
    assert recursion.terminator(1j, t, allow_degenerate=True) == 0


def test_negative_terminator_rejected():
    with pytest.raises(StructuralError):
        recursion.TerminatorParams(0.0, -0.1)


def test_greens_function_matches_resolvent():
    c = RecursionCoeffs.jacobi(0.5, 1.5)
    a, b = c.arrays(8)
    J = np.diag(a) + np.diag(b[:-1], 1) + np.diag(b[:-1], -1)
    z = 0.3 + 0.2j
    ref = -np.linalg.inv(z * np.eye(8) - J)[0, 0]
    assert abs(recursion.greens_function(c, z, 8) - ref) < 1e-13


def test_pole_is_reported():
    c = RecursionCoeffs.constant(0.0, 0.5)
    with pytest.raises(PoleProximityError) as info:
        recursion.greens_function(c, 0.0, 1)
    assert info.value.index == 0


def test_quadrature_estimate_has_chain_mass():
    c = RecursionCoeffs.jacobi(1.0, 1.5)
    est = recursion.density_quadrature(c, 40, 0.05, np.linspace(-1.5, 1.5, 3001))
    assert est.integral() == pytest.approx(c.mass, rel=1e-6)
    assert est.normalized().max() > 0


def test_density_cf_scaled_by_mass():
    c = RecursionCoeffs.jacobi(1.0, 1.5)
    grid = np.linspace(-1.2, 1.2, 2401)
    est = recursion.density_cf(c, grid, 80, None, 1e-3)
    assert est.integral() == pytest.approx(c.mass, rel=2e-2)


@pytest.mark.parametrize("a,b", [(0.0, 0.5), (1.0, 0.3)])
def test_generated_polynomials_orthonormal(a, b):
    c = RecursionCoeffs.constant(a, b)
    x, w = orthopoly.quadrature_from_recursion(c, 32)
    F = recursion.generate_polynomials(c, c.f0, x, 15)
    assert np.abs((F * w) @ F.T - np.eye(16)).max() < 1e-12


def test_generate_polynomials_stops_at_zero_b():
    c = RecursionCoeffs.from_arrays([0.0, 0.0, 0.0], [1.0, 0.0, 0.0])
    with pytest.raises(StructuralError):
        recursion.generate_polynomials(c, 1.0, np.array([0.1]), 3)


def test_asymptotics_bounded_and_unbounded():
    rep = recursion.asymptotic_coeffs(RecursionCoeffs.jacobi(1.0, 1.5), 200)
    assert rep.kind == "bounded-band"
    assert rep.b_inf == pytest.approx(0.5, rel=1e-3)
    rep = recursion.asymptotic_coeffs(RecursionCoeffs.laguerre(0.5), 200)
    assert rep.kind == "unbounded"
    assert rep.a_growth == pytest.approx(1.0, abs=0.05)


def test_unsorted_grid_rejected():
    with pytest.raises(StructuralError):
        recursion.density_cf(RecursionCoeffs.constant(0, 0.5), np.array([0.2, 0.1]), 5)
