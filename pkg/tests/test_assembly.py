import math

import numpy as np
import pytest

from noncentral import assembly, radial
from noncentral.angular import AngularPotentialParams
from noncentral.assembly import Regime, SolutionSpaceDescriptor
from noncentral.errors import BelowBarrierError, ParameterDomainError, QuantumNumberError, RegimeError

COUL = radial.RadialPotential.coulomb(-1.0)
OSC = radial.RadialPotential.oscillator(1.0)


@pytest.mark.parametrize("pot,regime", [
    ((0, 0, 0), Regime.DIAG_A),
    ((1.0, 0.5, 0), Regime.DIAG_A),
    ((1.0, 1.0, 0), Regime.DIAG_A),
    ((0.2, 0.6, 0), Regime.TRIDIAG_B),
    ((0.2, -0.6, 0), Regime.TRIDIAG_C),
    ((0.2, 0.6, 0.1), Regime.C0_NONZERO),
])
def test_classify(pot, regime):
    assert assembly.classify(AngularPotentialParams(*pot)) is regime


def test_descriptor_needs_gamma_outside_diagonal_regime():
    with pytest.raises(ParameterDomainError):
        SolutionSpaceDescriptor(AngularPotentialParams(1.0, 0.5, 0.3), COUL)
    with pytest.raises(ParameterDomainError):
        SolutionSpaceDescriptor(AngularPotentialParams(0.2, 0.6, 0.0), COUL, gamma=2.0)


def test_hydrogen_states_orthonormal():
    desc = SolutionSpaceDescriptor(AngularPotentialParams(0, 0, 0), COUL)
    states = [assembly.bound_state(desc, *q) for q in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 1, 1)]]
    for i, s in enumerate(states):
        for j, t in enumerate(states):
            if s.scale != t.scale:
                continue
            val = assembly.overlap_3d(s, t)
            assert abs(val - (i == j)) < 1e-12


def test_hydrogen_ground_density():
    desc = SolutionSpaceDescriptor(AngularPotentialParams(0, 0, 0), COUL)
    s = assembly.bound_state(desc, 0, 0, 0)
    r = np.linspace(0.1, 5, 20)
    assert np.allclose(s.psi2(r, 0.7, 0.3), np.exp(-2 * r) / math.pi, rtol=1e-13)


@pytest.mark.parametrize("pot,rad,gamma,nu_free,q", [
    ((0.75, 0.25, 0.0), COUL, None, None, (1, 1, -1)),
    ((0.75, 0.25, 0.0), OSC, None, None, (1, 0, 2)),
    ((1.5, 0.5, 0.4), COUL, 2.5, None, (0, 1, 0)),
    ((0.2, 0.6, 0.0), COUL, 2.0, 0.7, (0, 0, 0)),
    ((0.2, -0.6, 0.0), OSC, 2.0, 0.7, (1, 0, 0)),
])
def test_state_norms(pot, rad, gamma, nu_free, q):
    desc = SolutionSpaceDescriptor(AngularPotentialParams(*pot), rad, gamma=gamma, nu_free=nu_free)
    s = assembly.bound_state(desc, *q)
    assert assembly.norm_3d(s) == pytest.approx(1.0, abs=1e-6)


def test_series_state_outside_book():
    desc = SolutionSpaceDescriptor(AngularPotentialParams(1.5, 0.5, 0.4), COUL, gamma=2.5)
    with pytest.raises(QuantumNumberError):
        assembly.bound_state(desc, 0, 5, 0)


def test_series_spectrum_uses_book():
    desc = SolutionSpaceDescriptor(AngularPotentialParams(1.5, 0.5, 0.4), COUL, gamma=2.5)
    rows = assembly.enumerate_bound_spectrum(desc, 2)
    assert len(rows) == 2 * len(desc.book)
    assert {round(E, 12) for *_, E, _ in rows} == {round(-1 / (2 * 3.5 ** 2), 12), round(-1 / (2 * 4.5 ** 2), 12)}


def test_diagonal_spectrum_shifted_by_coupling():
    desc = SolutionSpaceDescriptor(AngularPotentialParams(0.75, 0.25, 0.0), COUL)
    rows = assembly.enumerate_bound_spectrum(desc, 2)
    ground = min(rows, key=lambda r: r[4])
    mu, nu = 1.0, math.sqrt(0.5)
    alpha = (mu + nu + 1) / 2 + 0.5
    assert ground[4] == pytest.approx(-1 / (2 * alpha ** 2), rel=1e-14)


def test_scattering_state_needs_coulomb():
    desc = SolutionSpaceDescriptor(AngularPotentialParams(0, 0, 0), OSC)
    with pytest.raises(RegimeError):
        assembly.scattering_state(desc, 0.5, 1.0)


def test_scattering_state_matches_radial_series():
    desc = SolutionSpaceDescriptor(AngularPotentialParams(0, 0, 0), COUL)
    s = assembly.scattering_state(desc, 0.5, 1.0, K=150, n=1, m=0)
    R, _ = radial.coulomb_scattering_radial(0.5, 1.0, "plus", 1.0, -1.0, 2.0, 150)
    ang = math.sqrt(3 / (4 * math.pi)) * math.cos(0.4)
    assert complex(s.evaluate(2.0, 0.4, 0.0)) == pytest.approx(R / 2.0 * ang, rel=1e-12)


def test_special_state_normalized_and_periodic():
    s = assembly.special_bound_state(0, 2, 0.3, -1.0, 1.5)
    assert assembly.norm_3d(s) == pytest.approx(1.0, abs=1e-12)
    p1, E = assembly.special_bound_psi(0, 2, 0.3, -1.0, 1.5, (1.0, 0.8, 0.2))
    p2, _ = assembly.special_bound_psi(0, 2, 0.3, -1.0, 1.5, (1.0, 0.8, 0.2 + 2 * math.pi))
    assert abs(p1 - p2) < 1e-13
    assert E == pytest.approx(-1 / (2 * 3.3 ** 2))


def test_special_state_needs_c0():
    with pytest.raises(RegimeError):
        assembly.special_angular(1, 0.0, 0.0)


def test_abm_reduces_to_coulomb_at_b_zero():
    for m in range(-2, 3):
        lv = assembly.abm_spectrum(0, 1, m, -1.0, 1.0, 0.0, 0.0)
        N = 1 + abs(m) + 1
        assert lv["energy"] == pytest.approx(-1 / (2 * N * N), rel=1e-15)


def test_abm_potential_map_exponents():
    a, b, zeta, m = 0.3, 0.2, 1.0, 1
    pm = assembly.abm_potential_map(a, b, zeta, m, -1.0)
    assert math.sqrt(m * m + pm["C_hat"] + pm["C"]) == pytest.approx(abs(m - zeta * (a - b)))
    assert math.sqrt(m * m + pm["C_hat"] - pm["C"]) == pytest.approx(abs(m - zeta * (a + b)))


def test_below_barrier_error_names_quantum_numbers():
    err = BelowBarrierError(2, -1)
    assert (err.n, err.m) == (2, -1)
    assert "(n=2, m=-1)" in str(err)
