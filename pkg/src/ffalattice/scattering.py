"""Stationary wave reflection from the lattice boundary.

A plane wave with momentum k hits the impurity-terminated edge and is
reflected with coefficient r(k).  For Hermitian parameters |r| = 1; for an
amplifying (absorbing) impurity the reflectance exceeds (stays below) one
and diverges (vanishes) exactly at a spectral singularity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, HermitianInputError, ReflectionDivergenceError
from .model import ModelParams, band_energy
from .spectrum import Singularity, SingularityKind, SingularityReport

_DIVERGENCE_TOL = 1e-13


@dataclass(frozen=True)
class ReflectanceSample:
    k: float
    energy: float
    r: complex | None
    reflectance: float | None
    divergent: bool


@dataclass(frozen=True)
class StationaryState:
    site_amps: np.ndarray
    impurity_amp: complex


def _scale(params: ModelParams) -> float:
    return params.kappa_a**2 + params.kappa0**2 * (2.0 + abs(params.ea) / params.kappa0)


def _r_fraction(params: ModelParams, k: float) -> tuple[complex, complex]:
    if not 0.0 < k < math.pi:
        raise DomainError(f"momentum k={k} outside the open interval (0, pi)")
    core = params.kappa0**2 * (2.0 * math.cos(k) + params.ea / params.kappa0)
    num = -(params.kappa_a**2 - core * cmath.exp(1j * k))
    den = params.kappa_a**2 - core * cmath.exp(-1j * k)
    return num, den


def reflection_coefficient(params: ModelParams, k: float) -> complex:
    """Spectral reflection coefficient r(k) for 0 < k < pi."""
    num, den = _r_fraction(params, k)
    if abs(den) < _DIVERGENCE_TOL * _scale(params):
        raise ReflectionDivergenceError(
            f"reflection diverges at k={k} (amplifying spectral singularity)")
    return num / den


def reflectance(params: ModelParams, k: float) -> float:
    """Reflection probability R(k) = |r(k)|^2 via the explicit real ratio."""
    if not 0.0 < k < math.pi:
        raise DomainError(f"momentum k={k} outside the open interval (0, pi)")
    k0 = params.kappa0
    a = (params.kappa_a**2 - 2.0 * k0 * k0) * math.cos(k) - k0 * params.ea.real
    s = params.kappa_a**2 * math.sin(k)
    num = a * a + (s + k0 * params.ea.imag) ** 2
    den = a * a + (s - k0 * params.ea.imag) ** 2
    if math.sqrt(den) < _DIVERGENCE_TOL * _scale(params):
        raise ReflectionDivergenceError(
            f"reflectance diverges at k={k} (amplifying spectral singularity)")
    return num / den


def reflectance_sample(params: ModelParams, k: float) -> ReflectanceSample:
    """Reflectance as a tagged value; divergence is a flag, never an Inf."""
    energy = band_energy(params, k)
    try:
        r = reflection_coefficient(params, k)
    except ReflectionDivergenceError:
        return ReflectanceSample(k=k, energy=energy, r=None, reflectance=None,
                                 divergent=True)
    return ReflectanceSample(k=k, energy=energy, r=r, reflectance=abs(r) ** 2,
                             divergent=False)


def default_k_grid(n_points: int = 2000) -> np.ndarray:
    """Uniform open grid on (0, pi); endpoints carry zero group velocity."""
    return np.linspace(0.0, math.pi, n_points + 2)[1:-1]


def reflectance_sweep(params: ModelParams, k_grid=None) -> list[ReflectanceSample]:
    if k_grid is None:
        k_grid = default_k_grid()
    return [reflectance_sample(params, float(k)) for k in np.asarray(k_grid)]


def stationary_state(params: ModelParams, k: float, n_max: int) -> StationaryState:
    """Scattering eigenstate amplitudes on sites 1..n_max plus the impurity.

    c_n = exp(-ik(n-1)) + r(k) exp(ik(n-1)); requires a finite r and a
    nonzero impurity hopping.
    """
    if params.kappa_a == 0.0:
        raise DomainError("stationary state undefined for a decoupled impurity")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    r = reflection_coefficient(params, k)
    n = np.arange(1, n_max + 1)
    site = np.exp(-1j * k * (n - 1)) + r * np.exp(1j * k * (n - 1))
    imp = (params.kappa0 / params.kappa_a) * (cmath.exp(1j * k) + r * cmath.exp(-1j * k))
    return StationaryState(site_amps=site, impurity_amp=imp)


def singularity_from_scattering(params: ModelParams, tol: float = 1e-9) -> SingularityReport:
    """Singularity search through the divergence/zero conditions on r(k).

    Solves kappa_a^2 sin(k0) = |Im(Ea)| kappa0 together with
    (kappa_a^2 - 2 kappa0^2) cos(k0) = kappa0 Re(Ea); must agree with the
    resolvent-route search.
    """
    if params.hermitian():
        raise HermitianInputError("scattering singularities require Im(Ea) != 0")
    k0h = params.kappa0
    ka2 = params.kappa_a**2
    sin_val = k0h * abs(params.ea.imag) / ka2 if ka2 > 0 else math.inf
    kind = (SingularityKind.AMPLIFYING if params.amplifying()
            else SingularityKind.ABSORBING)
    if sin_val > 1.0:
        return SingularityReport(singularities=())
    if sin_val >= 1.0 - tol:
        # sin(k0) = 1 within rounding: a single solution at the band center
        candidates = [0.5 * math.pi]
    else:
        base = math.asin(sin_val)
        candidates = [base, math.pi - base]
    accepted = []
    for kc in candidates:
        if not 0.0 < kc < math.pi:
            continue
        if abs((ka2 - 2.0 * k0h * k0h) * math.cos(kc) - k0h * params.ea.real) > tol:
            continue
        accepted.append(Singularity(energy=band_energy(params, kc), momentum=kc,
                                    kind=kind))
    degenerate = False
    at_band_center = abs(ka2 - 2.0 * k0h * k0h) <= tol * k0h * k0h
    if len(accepted) == 1 and abs(sin_val - 1.0) <= tol and at_band_center:
        # coalesced pair at k0 = pi/2: keep the two-pole structure
        accepted = accepted * 2
        degenerate = True
    accepted.sort(key=lambda s: s.energy, reverse=True)
    return SingularityReport(singularities=tuple(accepted), degenerate=degenerate)
