"""Parameter container and band functions of the semi-infinite lattice model.

The lattice has a cosine band E(k) = -2*kappa0*cos(k) on momenta k in [0, pi]
and a sine coupling v(k) = -sqrt(2/pi)*kappa_a*sin(k) between the band and a
boundary impurity site of (possibly complex) energy Ea.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BandEdgeError, DomainError


@dataclass(frozen=True)
class ModelParams:
    """Hopping rates and impurity energy defining the Hamiltonian.

    kappa0  -- intra-lattice hopping rate, > 0
    kappa_a -- impurity hopping rate, >= 0
    ea      -- impurity energy; a nonzero imaginary part makes the model
               non-Hermitian (Im > 0 amplifying, Im < 0 absorbing)
    """

    kappa0: float
    kappa_a: float
    ea: complex

    def __post_init__(self):
        if not (math.isfinite(self.kappa0) and self.kappa0 > 0):
            raise DomainError(f"kappa0 must be finite and > 0, got {self.kappa0}")
        if not (math.isfinite(self.kappa_a) and self.kappa_a >= 0):
            raise DomainError(f"kappa_a must be finite and >= 0, got {self.kappa_a}")
        ea = complex(self.ea)
        if not (math.isfinite(ea.real) and math.isfinite(ea.imag)):
            raise DomainError(f"ea must have finite components, got {self.ea}")
        object.__setattr__(self, "ea", ea)

    @property
    def band_edge(self) -> float:
        """Upper band edge 2*kappa0; the band is [-2*kappa0, 2*kappa0]."""
        return 2.0 * self.kappa0

    def hermitian(self) -> bool:
        return self.ea.imag == 0.0

    def amplifying(self) -> bool:
        return self.ea.imag > 0.0

    def absorbing(self) -> bool:
        return self.ea.imag < 0.0


def band_energy(params: ModelParams, k: float) -> float:
    """Band dispersion E(k) = -2*kappa0*cos(k) for k in [0, pi]."""
    if not 0.0 <= k <= math.pi:
        raise DomainError(f"momentum k={k} outside [0, pi]")
    return -2.0 * params.kappa0 * math.cos(k)


def momentum_of_energy(params: ModelParams, energy: float) -> float:
    """Inverse dispersion: the k in [0, pi] with band_energy(k) = energy."""
    x = -energy / (2.0 * params.kappa0)
    if abs(x) > 1.0:
        raise DomainError(f"energy {energy} outside the band |E| <= {params.band_edge}")
    return math.acos(x)


def density_of_states(params: ModelParams, energy: float) -> float:
    """1/sqrt(4*kappa0^2 - E^2) inside the band, 0 outside.

    Raises BandEdgeError exactly at |E| = 2*kappa0 (van Hove divergence);
    callers doing quadrature must use open-endpoint rules.
    """
    edge = params.band_edge
    if abs(energy) == edge:
        raise BandEdgeError(f"density of states diverges at the band edge E={energy}")
    if abs(energy) > edge:
        return 0.0
    return 1.0 / math.sqrt(edge * edge - energy * energy)


def spectral_coupling(params: ModelParams, k: float) -> float:
    """Coupling v(k) = -sqrt(2/pi)*kappa_a*sin(k) between band and impurity."""
    if not 0.0 <= k <= math.pi:
        raise DomainError(f"momentum k={k} outside [0, pi]")
    return -math.sqrt(2.0 / math.pi) * params.kappa_a * math.sin(k)


def spectral_density(params: ModelParams, energy: float) -> float:
    """Spectral function V(E) = rho(E)*|v(E)|^2, finite and >= 0 everywhere.

    Equals (kappa_a^2 / (pi*kappa0)) * sqrt(1 - (E/2kappa0)^2) inside the
    band and 0 outside; the band-edge square-root zero cancels the van Hove
    divergence of the density of states.
    """
    x = energy / params.band_edge
    if abs(x) >= 1.0:
        return 0.0
    return (params.kappa_a**2 / (math.pi * params.kappa0)) * math.sqrt(1.0 - x * x)
