import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from noncentral import radial
from noncentral.errors import NoBoundStatesError, ParameterDomainError
from noncentral.radial import Coordinate, RadialBasisParams
from noncentral.verify import coulomb_oracle, oscillator_oracle


def _gram(bp, N):
    def f(i, j):
        return quad(lambda r: radial.xi_eval(i, bp, r) * radial.xi_eval(j, bp, r), 0, np.inf, limit=200)[0]
    return np.array([[f(i, j) for j in range(N)] for i in range(N)])


def test_xi_orthonormal_when_nu_is_two_alpha():
    bp = RadialBasisParams(1.3, 0.8, 1.6, Coordinate.LINEAR)
    assert np.abs(_gram(bp, 4) - np.eye(4)).max() < 1e-9


def test_oscillator_basis_orthonormal():
    bp = RadialBasisParams.oscillator(1.1, 0.9)
    assert np.abs(_gram(bp, 4) - np.eye(4)).max() < 1e-9


def test_coulomb_basis_not_orthogonal():
    bp = RadialBasisParams.coulomb(1.0, 1.5)
    G = _gram(bp, 3)
    assert abs(G[0, 1]) > 1e-3


def test_hydrogen_radial_closed_forms():
    r = np.linspace(0.1, 10, 50)
    lv = radial.coulomb_bound_spectrum(0, 0.0, "plus", -1.0)
    assert lv.energy == -0.5 and lv.lambda_k == 2.0
    assert np.allclose(radial.coulomb_bound_radial(lv, r), 2 * r * np.exp(-r), atol=1e-15)
    lv = radial.coulomb_bound_spectrum(0, 1.0, "plus", -1.0)
    ref = r ** 2 * np.exp(-r / 2) / (2 * math.sqrt(6))
    assert np.allclose(radial.coulomb_bound_radial(lv, r), ref, atol=1e-15)


@settings(max_examples=20, deadline=None)
@given(k=st.integers(0, 6), gamma=st.floats(0.0, 4.0), Z=st.floats(-3.0, -0.2))
def test_coulomb_bound_norm(k, gamma, Z):
    lv = radial.coulomb_bound_spectrum(k, gamma, "plus", Z)
    val = quad(lambda r: radial.coulomb_bound_radial(lv, r) ** 2, 0, np.inf, limit=200)[0]
    assert val == pytest.approx(1.0, rel=1e-8)


def test_oscillator_ground_state():
    r = np.linspace(0.05, 5, 40)
    R = radial.oscillator_bound_radial(0, 0.0, "plus", 1.0, r)
    assert np.allclose(R, 2 * math.pi ** -0.25 * r * np.exp(-r * r / 2), atol=1e-14)
    assert [radial.oscillator_spectrum(k, 0.0, "plus", 1.0) for k in range(4)] == [1.5, 3.5, 5.5, 7.5]


def test_branches_give_same_alpha():
    assert radial.alpha_from_gamma(1.3, "plus") == radial.alpha_from_gamma(-2.3, "minus")
    with pytest.raises(ParameterDomainError):
        radial.alpha_from_gamma(-0.5, "minus")
    with pytest.raises(ParameterDomainError):
        radial.alpha_from_gamma(-0.5, "plus")


def test_repulsive_coulomb_has_no_bound_states():
    with pytest.raises(NoBoundStatesError):
        radial.coulomb_bound_spectrum(0, 1.0, "plus", 0.5)


def test_matrix_blocks_match_quadrature():
    alpha, lam, E, Z = 1.7, 1.3, -0.2, -0.8
    M = coulomb_oracle(alpha, lam, E, Z, N=6)
    B = radial.coulomb_matrix_block(6, alpha, lam, E, Z)
    assert np.abs(M - B).max() < 1e-10
    alpha, lam, om, E = 0.9, 1.2, 0.8, 1.1
    M = oscillator_oracle(alpha, lam, om, E, N=6)
    B = radial.oscillator_matrix_block(6, 2 * alpha - 0.5, lam, om, E)
    assert np.abs(M - B).max() < 1e-10


@pytest.mark.parametrize("E,gamma,Z", [(0.5, 1.0, -1.0), (0.8, 0.0, -0.5), (0.3, 2.0, 0.7)])
def test_scattering_is_the_coulomb_wave(E, gamma, Z):
    rs = np.array([0.5, 1.0, 2.0, 3.0])
    k = math.sqrt(2 * E)
    ref = np.array([float(mp.sqrt(2 / (mp.pi * k)) * mp.coulombf(gamma, Z / k, k * r)) for r in rs])
    val, diag = radial.coulomb_scattering_radial(E, gamma, "plus", 1.0, Z, rs, K=400)
    assert np.abs(val - ref).max() < 1e-7
    assert diag["summation"] == "smooth" and diag["normalization"] == "energy"


def test_lambda_normalization_scales_with_sqrt_lambda():
    kw = dict(E=0.5, gamma=1.0, branch="plus", Z=-1.0, r=1.0, K=200)
    _, d1 = radial.coulomb_scattering_radial(lam=1.0, normalization="lambda", **kw)
    _, e1 = radial.coulomb_scattering_radial(lam=1.0, **kw)
    _, d2 = radial.coulomb_scattering_radial(lam=2.0, normalization="lambda", **kw)
    _, e2 = radial.coulomb_scattering_radial(lam=2.0, **kw)
    assert (d2["norm"] / e2["norm"]) / (d1["norm"] / e1["norm"]) == pytest.approx(math.sqrt(2), rel=1e-12)


def test_scattering_rejects_bound_energy():
    with pytest.raises(ParameterDomainError):
        radial.coulomb_scattering_radial(-0.1, 1.0, "plus", 1.0, -1.0, 1.0)


def test_summation_window_shape():
    w = radial.summation_window(100)
    assert w[0] == 1.0 and w[50] == 1.0 and 0 < w[-1] < 1e-3
    assert np.all(np.diff(w) <= 0)
