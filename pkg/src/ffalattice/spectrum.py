"""Spectrum classification: bound states, reality domain, spectral
singularities and the biorthogonal-normalization cross-check.

Bound (surface) states map to roots xi of the quadratic

    xi^2 + (Ea/kappa0) xi + 1 - (kappa_a/kappa0)^2 = 0

with |xi| > 1; the spectrum is real iff no such root exists.  A spectral
singularity is a real band energy E0 where the resolvent diverges without a
normalizable eigenstate.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import selfenergy
from .errors import (
    BandEdgeError,
    BranchCutError,
    HermitianInputError,
    NonHermitianInputError,
)
from .model import ModelParams, momentum_of_energy, spectral_density

_BOUND_RESIDUAL_TOL = 1e-9
_COALESCENCE_TOL = 1e-12
# |xi| = 1 exactly on the singularity manifold; rounding must not tip the
# verdict to "bound state exists" there
_UNIT_CIRCLE_TOL = 1e-12


class SingularityKind(enum.Enum):
    AMPLIFYING = "amplifying"
    ABSORBING = "absorbing"


@dataclass(frozen=True)
class Singularity:
    energy: float
    momentum: float
    kind: SingularityKind


@dataclass(frozen=True)
class SingularityReport:
    singularities: tuple[Singularity, ...]
    degenerate: bool = False

    @property
    def count(self) -> int:
        return len(self.singularities)

    @property
    def energies(self) -> tuple[float, ...]:
        return tuple(s.energy for s in self.singularities)

    @property
    def momenta(self) -> tuple[float, ...]:
        return tuple(s.momentum for s in self.singularities)


@dataclass(frozen=True)
class BoundStateReport:
    xi1: complex
    xi2: complex
    has_bound_states: bool
    bound_energies: tuple[complex, ...] = field(default_factory=tuple)


def _quadratic_roots(params: ModelParams) -> tuple[complex, complex]:
    b = params.ea / params.kappa0
    c = 1.0 - (params.kappa_a / params.kappa0) ** 2
    disc = cmath.sqrt(b * b - 4.0 * c)
    r1 = (-b + disc) / 2.0
    r2 = (-b - disc) / 2.0
    return r1, r2


def bound_states(params: ModelParams) -> BoundStateReport:
    """Solve the surface-state quadratic and validate each candidate energy
    against the physical-sheet pole condition z - Ea = sigma(z).

    Squaring the pole condition introduces spurious determinations, so a
    root with |xi| > 1 is only reported as a bound energy if the residual of
    the original transcendental equation is below 1e-9.
    """
    xi1, xi2 = _quadratic_roots(params)
    has = max(abs(xi1), abs(xi2)) > 1.0 + _UNIT_CIRCLE_TOL
    energies = []
    for xi in (xi1, xi2):
        if abs(xi) <= 1.0 + _UNIT_CIRCLE_TOL:
            continue
        z = -params.kappa0 * (xi + 1.0 / xi)
        try:
            residual = abs(z - params.ea - selfenergy.sigma(params, z))
        except BranchCutError:
            continue
        if residual < _BOUND_RESIDUAL_TOL * max(1.0, params.kappa0):
            energies.append(z)
    return BoundStateReport(xi1=xi1, xi2=xi2, has_bound_states=has,
                            bound_energies=tuple(energies))


def spectrum_is_real(params: ModelParams) -> bool:
    """True iff the spectrum is purely continuous (no surface states)."""
    return not bound_states(params).has_bound_states


def find_singularities(params: ModelParams, tol: float = 1e-9) -> SingularityReport:
    """Locate spectral singularities E0 inside the open band.

    Candidates come from the closed-form solution of the real part condition;
    each is accepted only if the imaginary part condition
    |Im(Ea)| = (kappa_a^2/kappa0) * sqrt(1 - (E0/2kappa0)^2) holds to tol.
    """
    if params.hermitian():
        raise HermitianInputError("spectral singularities require Im(Ea) != 0")
    k0 = params.kappa0
    edge = params.band_edge
    kind = (SingularityKind.AMPLIFYING if params.amplifying()
            else SingularityKind.ABSORBING)
    coeff = 1.0 - params.kappa_a**2 / (2.0 * k0 * k0)

    degenerate = False
    if abs(coeff) <= _COALESCENCE_TOL:
        # kappa_a = sqrt(2)*kappa0: two singularities, only for Re(Ea) = 0
        if abs(params.ea.real) > tol * k0:
            candidates = []
        else:
            radicand = edge * edge - params.ea.imag**2
            if radicand > 0.0:
                e0 = math.sqrt(radicand)
                candidates = [e0, -e0]
            elif radicand == 0.0 or abs(radicand) <= tol * edge * edge:
                candidates = [0.0, 0.0]
                degenerate = True
            else:
                candidates = []
    else:
        candidates = [params.ea.real / coeff]

    accepted = []
    for e0 in candidates:
        if abs(e0) >= edge:
            continue
        target = (params.kappa_a**2 / k0) * math.sqrt(1.0 - (e0 / edge) ** 2)
        if abs(abs(params.ea.imag) - target) > tol:
            continue
        accepted.append(Singularity(energy=e0,
                                    momentum=momentum_of_energy(params, e0),
                                    kind=kind))
    if degenerate and len(accepted) < 2:
        degenerate = False
    return SingularityReport(singularities=tuple(accepted), degenerate=degenerate)


def singularity_constraint_residual(params: ModelParams) -> float:
    """Residual of the single-singularity constraint for kappa_a < sqrt(2)k0.

    Zero (within tolerance) iff a spectral singularity exists; traces the
    boundary of the real-spectrum domains.
    """
    k0 = params.kappa0
    if params.kappa_a >= math.sqrt(2.0) * k0:
        raise ValueError("constraint residual defined for kappa_a < sqrt(2)*kappa0")
    denom = 2.0 * k0 - params.kappa_a**2 / k0
    return params.ea.imag**2 - (params.kappa_a**4 / k0**2) * (
        1.0 - params.ea.real**2 / denom**2
    )


def reality_domain_scan(kappa_ratio_grid, im_ea_grid, re_ea_over_kappa0: float) -> np.ndarray:
    """Boolean grid of spectrum_is_real over (kappa_a/kappa0, Im(Ea)/kappa0).

    Vectorized closed-form evaluation of the |xi| <= 1 criterion; results are
    independent of evaluation order.
    """
    ratios = np.asarray(kappa_ratio_grid, dtype=float)
    ims = np.asarray(im_ea_grid, dtype=float)
    if ratios.size == 0 or ims.size == 0:
        raise ValueError("grids must be nonempty")
    r = ratios[:, None]
    b = (re_ea_over_kappa0 + 1j * ims)[None, :]
    c = 1.0 - r * r
    disc = np.sqrt((b * b - 4.0 * c).astype(complex))
    xi1 = (-b + disc) / 2.0
    xi2 = (-b - disc) / 2.0
    return np.maximum(np.abs(xi1), np.abs(xi2)) <= 1.0 + _UNIT_CIRCLE_TOL


def fano_z(params: ModelParams, energy: float) -> complex:
    """Delta-function weight z(E) = (Ea - E + Delta(E)) / V(E) of the
    continuum eigenfunction expansion."""
    v = spectral_density(params, energy)
    if v <= 0.0:
        raise BandEdgeError(f"V(E) vanishes at E={energy}")
    return (params.ea - energy + selfenergy.delta_shift(params, energy)) / v


def fano_profile(params: ModelParams, energy: float) -> float:
    """Hermitian resonance profile V / (pi^2 V^2 + (Ea - E + Delta)^2).

    Peaked near E = Ea - Delta(Ea); only defined for real Ea.
    """
    if not params.hermitian():
        raise NonHermitianInputError("resonance profile requires Im(Ea) = 0")
    v = spectral_density(params, energy)
    detune = params.ea.real - energy + selfenergy.delta_shift(params, energy)
    if v == 0.0:
        return 0.0  # numerator vanishes faster than the guard below
    return v / (math.pi**2 * v * v + detune * detune)


def biorthogonal_norm_factor(params: ModelParams, energy: float) -> complex:
    """Normalization factor V(E) * (pi^2 + conj(z(E))^2) of the biorthogonal
    continuum basis; its zero at E = E0 signals a spectral singularity."""
    v = spectral_density(params, energy)
    if v <= 0.0:
        raise BandEdgeError(f"V(E) vanishes at E={energy}")
    zc = fano_z(params, energy).conjugate()
    return v * (math.pi**2 + zc * zc)
