import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad
from scipy.special import eval_genlaguerre, eval_jacobi, roots_genlaguerre, roots_jacobi

from noncentral import orthopoly
from noncentral.chain import RecursionCoeffs
from noncentral.errors import ParameterDomainError

params = st.floats(-0.9, 6.0)
xs = st.floats(-1.0, 1.0)


@settings(max_examples=60, deadline=None)
@given(mu=params, nu=params, x=xs, n=st.integers(0, 15))
def test_jacobi_matches_scipy(mu, nu, x, n):
    p = orthopoly.JacobiParams(mu, nu)
    ref = eval_jacobi(n, mu, nu, x)
    assert orthopoly.jacobi_eval(n, p, x) == pytest.approx(ref, rel=1e-10, abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(mu=params, nu=params, x=xs, n=st.integers(0, 12))
def test_jacobi_reflection(mu, nu, x, n):
    a = orthopoly.jacobi_eval(n, orthopoly.JacobiParams(mu, nu), -x)
    b = orthopoly.jacobi_eval(n, orthopoly.JacobiParams(nu, mu), x)
    assert a == pytest.approx((-1) ** n * b, rel=1e-10, abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(nu=params, x=st.floats(0.0, 30.0), n=st.integers(0, 15))
def test_laguerre_matches_scipy(nu, x, n):
    ref = eval_genlaguerre(n, nu, x)
    got = orthopoly.laguerre_eval(n, orthopoly.LaguerreParams(nu), x)
    assert got == pytest.approx(ref, rel=1e-9, abs=1e-9 * max(1.0, abs(ref)))


def test_jacobi_norm_by_quadrature():
    p = orthopoly.JacobiParams(1.0, 1.5)
    x, w = roots_jacobi(30, 1.0, 1.5)
    for n in range(8):
        val = np.sum(w * orthopoly.jacobi_eval(n, p, x) ** 2)
        assert val == pytest.approx(orthopoly.jacobi_norm(n, p), rel=1e-12)


def test_laguerre_norm_by_quadrature():
    p = orthopoly.LaguerreParams(0.7)
    x, w = roots_genlaguerre(30, 0.7)
    for n in range(8):
        val = np.sum(w * orthopoly.laguerre_eval(n, p, x) ** 2)
        assert val == pytest.approx(orthopoly.laguerre_norm(n, p), rel=1e-11)


@pytest.mark.parametrize("mu,nu", [(0.0, 0.0), (1.0, 1.5), (-0.5, 2.0)])
def test_gauss_jacobi_matches_scipy(mu, nu):
    x, w = orthopoly.gauss_jacobi(12, mu, nu)
    xr, wr = roots_jacobi(12, mu, nu)
    assert np.allclose(np.sort(x), xr, atol=1e-13)
    assert np.allclose(w[np.argsort(x)], wr, rtol=1e-11)


def test_golub_welsch_semicircle_moments():
    # constant chain a = 0, b = 1/2: Chebyshev-U measure on [-1, 1]; even moments are Catalan numbers / 4^k
    x, w = orthopoly.quadrature_from_recursion(RecursionCoeffs.constant(0.0, 0.5), 20)
    for k in range(6):
        catalan = math.comb(2 * k, k) / (k + 1)
        assert np.sum(w * x ** (2 * k)) == pytest.approx(catalan / 4 ** k, rel=1e-12)


def test_meixner_pollaczek_orthogonality():
    p = orthopoly.MPParams(1.2, 0.9)

    def inner(j, k):
        f = lambda z: orthopoly.mp_weight(p, z) * orthopoly.mp_eval(j, p, z) * orthopoly.mp_eval(k, p, z)
        return quad(f, -np.inf, np.inf, limit=200)[0]

    for j in range(4):
        for k in range(j):
            assert abs(inner(j, k)) < 1e-9
        assert inner(j, j) == pytest.approx(math.exp(orthopoly.mp_log_norm(j, p)), rel=1e-7)


def test_hyperbolic_mp_needs_flag():
    with pytest.raises(ParameterDomainError):
        orthopoly.mp_eval(2, orthopoly.MPParams(1.0, 0.5, hyperbolic=True), 0.1)


@pytest.mark.parametrize("mu,nu", [(-1.0, 0.0), (0.0, -1.5)])
def test_jacobi_domain(mu, nu):
    with pytest.raises(ParameterDomainError):
        orthopoly.JacobiParams(mu, nu)


@pytest.mark.parametrize("phi", [0.0, math.pi, -0.3])
def test_mp_angle_domain(phi):
    with pytest.raises(ParameterDomainError):
        orthopoly.MPParams(1.0, phi)
