"""Closed-form self-energy of the impurity site with its branch structure.

Inside the band the self-energy has a cut; its boundary values are
Delta(E) -/+ i*pi*V(E) on the upper/lower lip.  The second Riemann sheet is
the analytic continuation of the upper half-plane values through the cut.
"""

from __future__ import annotations

import cmath
import enum
import math

import numpy as np
from scipy.integrate import quad

from .errors import BranchCutError, DomainError, QuadratureError
from .model import ModelParams, spectral_density


class Sheet(enum.Enum):
    FIRST = "first"
    SECOND = "second"


def _on_cut(params: ModelParams, z: complex) -> bool:
    return z.imag == 0.0 and abs(z.real) <= params.band_edge


def _w(params: ModelParams, z: complex) -> complex:
    """Branch of sqrt(4*kappa0^2 - z^2) that is real-positive on the upper
    lip of the cut and behaves as -i*z at infinity.

    Written as -i*z*sqrt(1 - 4*kappa0^2/z^2) with the principal square root,
    which places the only branch cut on the band segment of the real axis.
    """
    z = complex(z)
    if z == 0:
        # z = 0 sits on the cut; return the upper-lip limit.
        return complex(params.band_edge)
    return -1j * z * cmath.sqrt(1.0 - (params.band_edge / z) ** 2)


def sigma(params: ModelParams, z: complex) -> complex:
    """First-sheet self-energy, analytic off the cut [-2k0, 2k0].

    Satisfies sigma(conj(z)) = conj(sigma(z)) and z*sigma(z) -> kappa_a^2
    as |z| -> infinity.
    """
    if params.kappa_a == 0.0:
        return 0.0 + 0.0j
    z = complex(z)
    if _on_cut(params, z):
        raise BranchCutError(
            f"z={z} lies on the branch cut; use sigma_boundary for lip values"
        )
    c = params.kappa_a**2 / (2.0 * params.kappa0**2)
    return -1j * c * (_w(params, z) + 1j * z)


def delta_shift(params: ModelParams, energy: float) -> float:
    """Principal-value level shift Delta(E), continuous across band edges."""
    k0 = params.kappa0
    c = params.kappa_a**2 / (2.0 * k0 * k0)
    edge = params.band_edge
    if energy < -edge:
        return c * (energy + math.sqrt(energy * energy - edge * edge))
    if energy > edge:
        return c * (energy - math.sqrt(energy * energy - edge * edge))
    return c * energy


def sigma_boundary(params: ModelParams, energy: float, side: int) -> complex:
    """Boundary value Delta(E) -/+ i*pi*V(E) for side = +1 / -1.

    side = +1 is the limit from Im(z) > 0 (upper lip).
    """
    if side not in (+1, -1):
        raise DomainError(f"side must be +1 or -1, got {side}")
    if abs(energy) >= params.band_edge:
        raise DomainError(f"E={energy} not strictly inside the band")
    return delta_shift(params, energy) - side * 1j * math.pi * spectral_density(params, energy)


def sigma_second_sheet(params: ModelParams, z: complex) -> complex:
    """Analytic continuation of sigma from the upper half-plane through the
    cut into the lower half-plane (opposite square-root determination).

    For Im(z) > 0 the continuation coincides with the first sheet; on the
    real axis inside the band it equals the upper-lip boundary value, so the
    function is smooth across the cut.
    """
    z = complex(z)
    if z.imag > 0.0:
        return sigma(params, z)
    if params.kappa_a == 0.0:
        return 0.0 + 0.0j
    c = params.kappa_a**2 / (2.0 * params.kappa0**2)
    if z.imag == 0.0:
        if abs(z.real) >= params.band_edge:
            raise DomainError(
                f"second sheet is only defined for Re(z) inside the band, got {z}"
            )
        return sigma_boundary(params, z.real, +1)
    return -1j * c * (-_w(params, z) + 1j * z)


def sigma_derivative(params: ModelParams, z: complex, sheet: Sheet = Sheet.FIRST) -> complex:
    """d(sigma)/dz on either sheet, from w'(z) = -z/w(z)."""
    if params.kappa_a == 0.0:
        return 0.0 + 0.0j
    z = complex(z)
    c = params.kappa_a**2 / (2.0 * params.kappa0**2)
    if sheet is Sheet.FIRST or z.imag > 0.0:
        if _on_cut(params, z):
            raise BranchCutError(f"z={z} lies on the branch cut")
        w = _w(params, z)
        return -1j * c * (-z / w + 1j)
    if z.imag == 0.0:
        if abs(z.real) >= params.band_edge:
            raise DomainError(f"Re(z) must be inside the band, got {z}")
        w = -math.sqrt(params.band_edge**2 - z.real**2)  # lower-lip limit
    else:
        w = _w(params, z)
    return -1j * c * (z / w + 1j)


_MAX_SUBDIVISIONS = 400  # caps the adaptive refinement at ~2e5 evaluations


def sigma_quadrature_oracle(params: ModelParams, z: complex, rel_tol: float = 1e-9) -> complex:
    """Independent evaluation of the defining integral of the self-energy.

    Integrates V(E)/(z - E) over the band after the substitution
    E = -2*kappa0*cos(theta), which removes the band-edge singularity of the
    density of states and leaves an analytic integrand for z off the cut.
    """
    z = complex(z)
    if _on_cut(params, z):
        raise QuadratureError(f"integrand pole on the path: z={z} is on the cut")
    if params.kappa_a == 0.0:
        return 0.0 + 0.0j
    pref = 2.0 * params.kappa_a**2 / math.pi
    k0 = params.kappa0

    def integrand(theta, part):
        val = pref * math.sin(theta) ** 2 / (z + 2.0 * k0 * math.cos(theta))
        return val.real if part == 0 else val.imag

    re, re_err = quad(integrand, 0.0, math.pi, args=(0,), limit=_MAX_SUBDIVISIONS,
                      epsabs=1e-13, epsrel=rel_tol)
    im, im_err = quad(integrand, 0.0, math.pi, args=(1,), limit=_MAX_SUBDIVISIONS,
                      epsabs=1e-13, epsrel=rel_tol)
    result = complex(re, im)
    err = math.hypot(re_err, im_err)
    if err > max(1e-6 * abs(result), 1e-12):
        raise QuadratureError(
            f"self-energy quadrature did not converge at z={z}", achieved_error=err
        )
    return result


def delta_quadrature_oracle(params: ModelParams, energy: float) -> float:
    """Principal-value quadrature of V(E')/(E - E') over the band.

    Independent check of delta_shift.  Uses the Cauchy-weight rule when the
    pole sits inside the band and plain adaptive quadrature otherwise.
    """
    edge = params.band_edge

    def v_of(e):
        return spectral_density(params, e)

    if abs(energy) < edge:
        # quad(..., weight='cauchy', wvar=E) computes PV int f(E')/(E'-E) dE'
        val, _ = quad(v_of, -edge, edge, weight="cauchy", wvar=energy,
                      limit=_MAX_SUBDIVISIONS)
        return -val
    val, _ = quad(lambda e: v_of(e) / (energy - e), -edge, edge,
                  limit=_MAX_SUBDIVISIONS, points=[-edge, edge])
    return val


def sigma_grid(params: ModelParams, z_values: np.ndarray) -> np.ndarray:
    """Vectorized first-sheet sigma over an array of off-cut complex points."""
    z = np.asarray(z_values, dtype=complex)
    if np.any((z.imag == 0.0) & (np.abs(z.real) <= params.band_edge)):
        raise BranchCutError("grid contains points on the branch cut")
    c = params.kappa_a**2 / (2.0 * params.kappa0**2)
    w = -1j * z * np.sqrt(1.0 - (params.band_edge / z) ** 2)
    return -1j * c * (w + 1j * z)
