"""Dispersion, density of states and spectral coupling checks."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from ffalattice import (
    BandEdgeError,
    DomainError,
    ModelParams,
    band_energy,
    density_of_states,
    momentum_of_energy,
    spectral_coupling,
    spectral_density,
)


def test_params_validation():
    with pytest.raises(DomainError):
        ModelParams(kappa0=0.0, kappa_a=1.0, ea=0.0)
    with pytest.raises(DomainError):
        ModelParams(kappa0=-1.0, kappa_a=1.0, ea=0.0)
    with pytest.raises(DomainError):
        ModelParams(kappa0=1.0, kappa_a=-0.5, ea=0.0)
    with pytest.raises(DomainError):
        ModelParams(kappa0=1.0, kappa_a=1.0, ea=complex("inf"))
    p = ModelParams(kappa0=1.0, kappa_a=0.0, ea=1.0 + 0.0j)
    assert p.band_edge == 2.0


def test_character_flags():
    assert ModelParams(1.0, 1.0, 0.5).hermitian()
    assert ModelParams(1.0, 1.0, 1j).amplifying()
    assert ModelParams(1.0, 1.0, -1j).absorbing()
    assert not ModelParams(1.0, 1.0, 1j).hermitian()


def test_band_energy_endpoints_and_monotonicity():
    p = ModelParams(1.5, 1.0, 0.0)
    assert band_energy(p, 0.0) == pytest.approx(-3.0)
    assert band_energy(p, math.pi) == pytest.approx(3.0)
    k = np.linspace(0.0, math.pi, 200)
    e = np.array([band_energy(p, ki) for ki in k])
    assert np.all(np.diff(e) > 0)


def test_momentum_energy_roundtrip():
    p = ModelParams(1.2, 0.7, 0.0)
    rng = np.random.default_rng(7)
    for k in rng.uniform(1e-3, math.pi - 1e-3, 50):
        e = band_energy(p, k)
        assert momentum_of_energy(p, e) == pytest.approx(k, abs=1e-12)


def test_density_of_states_value_and_edges():
    p = ModelParams(1.0, 1.0, 0.0)
    assert density_of_states(p, 0.0) == pytest.approx(0.5)
    assert density_of_states(p, 1.0) == pytest.approx(1.0 / math.sqrt(3.0))
    for edge in (2.0, -2.0):
        with pytest.raises(BandEdgeError):
            density_of_states(p, edge)
    assert density_of_states(p, 2.5) == 0.0


def test_spectral_density_integrates_to_coupling_squared():
    for ka in (0.5, 1.0, 1.7):
        p = ModelParams(1.0, ka, 0.0)
        total, err = quad(lambda e: spectral_density(p, e), -2.0, 2.0)
        assert total == pytest.approx(ka**2, rel=1e-10)


def test_spectral_coupling_matches_density():
    p = ModelParams(1.0, 0.9, 0.0)
    rng = np.random.default_rng(11)
    for k in rng.uniform(1e-3, math.pi - 1e-3, 30):
        v = spectral_coupling(p, k)
        assert v == pytest.approx(-math.sqrt(2.0 / math.pi) * 0.9 * math.sin(k))
        # V(E) = v(k)^2 * rho(E) on the band
        e = band_energy(p, k)
        assert spectral_density(p, e) == pytest.approx(
            v * v * density_of_states(p, e), rel=1e-12)


def test_spectral_density_closed_form():
    p = ModelParams(1.0, 1.3, 0.0)
    e = 0.8
    expect = (1.3**2 / math.pi) * math.sqrt(1.0 - (e / 2.0) ** 2)
    assert spectral_density(p, e) == pytest.approx(expect, rel=1e-14)
