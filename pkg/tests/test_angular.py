import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from noncentral import angular, orthopoly
from noncentral.angular import AngularCase, AngularPotentialParams
from noncentral.errors import ImaginaryParameterError, ParameterDomainError, RegimeError


def test_h_at_zero_sigma_is_jacobi():
    z = np.linspace(-1, 1, 41)
    H = angular.h_table(10, 0.0, 1.0, 1.5, z)
    P = orthopoly.jacobi_table(10, orthopoly.JacobiParams(1.0, 1.5), z)
    assert np.array_equal(H, P)


def test_chi_orthonormal():
    pot = AngularPotentialParams(0.75, 0.25, 0.3)
    bp = angular.basis_params(AngularCase.A, pot, 1)
    x, w = orthopoly.gauss_jacobi(20, bp.mu, bp.nu)
    C = angular.chi_table(6, bp, x) / ((1 - x) ** (bp.mu / 2) * (1 + x) ** (bp.nu / 2))
    G = (C * w) @ C.T
    assert np.abs(G - np.eye(7)).max() < 1e-13
    ea, eb = bp.weight_exponents
    assert (ea, eb) == (bp.mu, bp.nu)


@pytest.mark.parametrize("case,pot,m,gamma,nu_free", [
    (AngularCase.A, AngularPotentialParams(1.5, 0.5, 0.4), 0, 2.5, None),
    (AngularCase.A, AngularPotentialParams(0.3, -0.2, -1.1), 1, 3.5, None),
    (AngularCase.B, AngularPotentialParams(0.2, 0.6, 0.0), 0, 2.0, 0.7),
    (AngularCase.C, AngularPotentialParams(0.2, -0.6, 0.0), 0, 2.0, 0.7),
])
def test_series_coefficients_solve_the_recursion(case, pot, m, gamma, nu_free):
    bp = angular.basis_params(case, pot, m, nu_free)
    z, param = angular.spectral_variable(case, bp, gamma, pot.C0)
    N = 8
    f = angular.series_coefficients(case, bp, N - 1, z, param)
    J = angular.angular_matrix(case, bp, N, gamma, pot.C0)
    r = J @ f
    assert np.abs(r[:-1]).max() < 1e-10 * max(1.0, np.abs(f).max())


def test_diagonal_gamma_annihilates_state():
    pot = AngularPotentialParams(0.75, 0.25, 0.0)
    bp = angular.basis_params(AngularCase.DIAGONAL, pot, 1)
    for n in range(5):
        gp, gm = angular.diagonal_gamma(n, bp)
        for g in (gp, gm):
            assert abs(angular.matrix_elements_case_a(n, n, bp, g, 0.0)) < 1e-13
        assert gp * (gp + 1) == pytest.approx(gm * (gm + 1), rel=1e-13)


def test_q_weight_mass_and_moments():
    mu, nu = 1.0, 1.5
    c = (nu + 1) / 2
    for tau in (0.5, 1.0, 1.5, 2.0):
        x_nodes, w_nodes = orthopoly.quadrature_from_recursion(angular.q_chain(tau * tau, mu, nu), 30)
        w_nodes = w_nodes / w_nodes.sum()
        _, masses = angular.q_weight(0.0, tau * tau, mu, nu)
        for k in range(4):
            cont = quad(lambda x: angular.q_weight(c * c + x * x, tau * tau, mu, nu)[0] * (c * c + x * x) ** k * 2 * x,
                        0, np.inf, limit=200)[0]
            moment = cont + sum(w * z ** k for z, w in masses)
            assert moment == pytest.approx(np.sum(w_nodes * x_nodes ** k), rel=1e-8)


def test_q_weight_point_masses():
    _, m15 = angular.q_weight(0.0, 1.5 ** 2, 1.0, 1.5)
    assert len(m15) == 1 and m15[0][0] == pytest.approx(1.3125)
    _, m05 = angular.q_weight(0.0, 0.25, 1.0, 1.5)
    assert m05 == []


def test_q_weight_rejects_non_positive_measure():
    with pytest.raises(ParameterDomainError):
        angular.q_weight(1.0, 2.25 ** 2, 1.0, 1.5)


def test_book_diagonal_hydrogen_like():
    pot = AngularPotentialParams(0.0, 0.0, 0.0)
    book = angular.allowed_quantum_numbers(AngularCase.DIAGONAL, pot, 2.0)
    # n + |m| <= 2
    assert set(book.entries()) == {(n, m) for m in range(-2, 3) for n in range(3 - abs(m))}
    assert len(book) == 9 and book.M == 0


def test_book_empty_for_small_gamma():
    pot = AngularPotentialParams(4.0, 1.0, 0.3)
    assert angular.allowed_quantum_numbers(AngularCase.A, pot, 0.1).empty


def test_minimum_m_and_imaginary_parameter():
    pot = AngularPotentialParams(-3.0, 0.5, 0.0)
    M = angular.minimum_m(AngularCase.DIAGONAL, pot)
    assert M == 2
    with pytest.raises(ImaginaryParameterError):
        angular.basis_params(AngularCase.DIAGONAL, pot, 1)


def test_special_branch_only_on_request():
    pot = AngularPotentialParams(0.25, 0.0, 0.0)
    bp = angular.basis_params(AngularCase.DIAGONAL, pot, 0)
    assert bp.mu == pytest.approx(0.5) and not bp.special_branch
    bp = angular.basis_params(AngularCase.DIAGONAL, pot, 0, allow_special=True)
    assert bp.mu == pytest.approx(-0.5) and bp.special_branch


def test_h_series_needs_c0():
    bp = angular.basis_params(AngularCase.A, AngularPotentialParams(0.0, 0.0, 0.0), 0)
    with pytest.raises(RegimeError):
        angular.spectral_variable(AngularCase.A, bp, 1.0, 0.0)


@settings(max_examples=30, deadline=None)
@given(e=st.floats(0.0, 50.0))
def test_gamma_energy_round_trip(e):
    for branch in ("plus", "minus"):
        g = angular.gamma_from_energy(e, branch)
        assert angular.energy_from_gamma(g) == pytest.approx(e, rel=1e-12, abs=1e-12)


def test_phi_component_unit_norm():
    phi = 2 * math.pi * np.arange(64) / 64
    for m in (-2, 0, 3):
        val = np.sum(np.abs(angular.phi_component(m, phi)) ** 2) * 2 * math.pi / 64
        assert val == pytest.approx(1.0, rel=1e-14)
