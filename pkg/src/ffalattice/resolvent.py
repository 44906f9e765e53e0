"""Matrix elements of the resolvent, second-sheet poles and the survival
amplitude of the impurity state.

The survival amplitude is evaluated on a horizontal line Im(z) = b > 0.
A three-term rational reference with known analytic transform is subtracted
from G_aa so that the remaining line integrand decays like 1/x^4, keeping the
truncation error small despite the exp(b*t) growth of the kernel.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import selfenergy, spectrum
from .errors import ContourError, DomainError, PoleProximityWarning, RealSpectrumRequiredError
from .model import ModelParams, band_energy, spectral_coupling
from .selfenergy import Sheet

_POLE_WARN_TOL = 1e-12


@dataclass(frozen=True)
class Pole:
    z: complex
    residue: complex
    sheet: Sheet


@dataclass(frozen=True)
class PoleReport:
    poles: tuple[Pole, ...]
    search_region: tuple[float, float, float, float]  # re_min, re_max, im_min, im_max


@dataclass(frozen=True)
class GkkElement:
    """Regular part of <k|G|k'> plus the coefficient of delta(k - k')."""

    regular: complex
    delta_coefficient: complex


@dataclass(frozen=True)
class BromwichResult:
    t: np.ndarray
    amplitude: np.ndarray
    truncation_estimate: np.ndarray


@dataclass(frozen=True)
class SurvivalAsymptote:
    level: float
    beat_frequency: float | None
    poles: tuple[Pole, ...]


def _denominator(params: ModelParams, z: complex, sheet: Sheet) -> complex:
    if sheet is Sheet.FIRST:
        sig = selfenergy.sigma(params, z)
    else:
        sig = selfenergy.sigma_second_sheet(params, z)
    return z - params.ea - sig


def g_aa(params: ModelParams, z: complex, sheet: Sheet = Sheet.FIRST) -> complex:
    """Impurity matrix element 1/(z - Ea - sigma(z)) on the given sheet."""
    denom = _denominator(params, complex(z), sheet)
    if abs(denom) < _POLE_WARN_TOL:
        warnings.warn(f"resolvent evaluated within {abs(denom):.2e} of a pole at z={z}",
                      PoleProximityWarning, stacklevel=2)
    return 1.0 / denom


def g_ak(params: ModelParams, z: complex, k: float) -> complex:
    """<a|G(z)|k> = v(k) / ((z - E(k)) * (z - Ea - sigma))."""
    return spectral_coupling(params, k) / (z - band_energy(params, k)) * g_aa(params, z)


def g_ka(params: ModelParams, z: complex, k: float) -> complex:
    """<k|G(z)|a>; equals g_ak here because the coupling is real."""
    return spectral_coupling(params, k) / (z - band_energy(params, k)) * g_aa(params, z)


def g_kk(params: ModelParams, z: complex, k: float, k_prime: float) -> GkkElement:
    """Band-band matrix element, split into its regular part and the
    coefficient of the delta(k - k') term (never a numeric delta)."""
    vk = spectral_coupling(params, k)
    vkp = spectral_coupling(params, k_prime)
    regular = (vkp * vk / ((z - band_energy(params, k)) * (z - band_energy(params, k_prime)))
               * g_aa(params, z))
    return GkkElement(regular=regular, delta_coefficient=1.0 / (z - band_energy(params, k_prime)))


# ---------------------------------------------------------------------------
# second-sheet pole search


def _boundary_points(region, n_per_edge):
    re0, re1, im0, im1 = region
    top = np.linspace(re0, re1, n_per_edge, endpoint=False)
    right = np.linspace(im0, im1, n_per_edge, endpoint=False)
    bottom = np.linspace(re1, re0, n_per_edge, endpoint=False)
    left = np.linspace(im1, im0, n_per_edge, endpoint=False)
    pts = np.concatenate([
        top + 1j * im0,
        re1 + 1j * right,
        bottom + 1j * im1,
        re0 + 1j * left,
    ])
    return pts


def _winding_number(params: ModelParams, region) -> int:
    """Winding of z - Ea - sigma_II(z) around the rectangle boundary,
    counted by continuous phase tracking with adaptive refinement."""
    n = 64
    while True:
        pts = _boundary_points(region, n)
        vals = np.array([_denominator(params, z, Sheet.SECOND) for z in pts])
        mags = np.abs(vals)
        scale = max(abs(region[1] - region[0]), abs(region[3] - region[2]))
        if np.min(mags) < 1e-10 * max(1.0, params.kappa0):
            raise ContourError("contour passes through (or very near) a zero; "
                               "retry with a jittered rectangle")
        steps = np.angle(np.roll(vals, -1) / vals)
        if np.max(np.abs(steps)) < 2.0 or n >= 8192:
            total = float(np.sum(steps))
            winding = round(total / (2.0 * math.pi))
            if abs(total / (2.0 * math.pi) - winding) > 0.25:
                raise ContourError(f"ambiguous winding number {total / (2 * math.pi):.3f}")
            return winding
        n *= 2


def _newton_polish(params: ModelParams, z0: complex, tol: float) -> complex | None:
    z = z0
    for _ in range(60):
        try:
            f = _denominator(params, z, Sheet.SECOND)
            fp = 1.0 - selfenergy.sigma_derivative(params, z, Sheet.SECOND)
        except (DomainError, ZeroDivisionError):
            return None
        if fp == 0:
            return None
        step = f / fp
        z = z - step
        if abs(step) < tol:
            return z
    return None


def _search(params: ModelParams, region, depth, tol, found):
    try:
        winding = _winding_number(params, region)
    except ContourError:
        if depth > 24:
            raise
        # jitter the rectangle slightly and retry once per level
        re0, re1, im0, im1 = region
        eps = 3e-7 * max(re1 - re0, im1 - im0)
        winding = _winding_number(params, (re0 - eps, re1 + eps, im0 - eps, im1 + eps))
    if winding == 0:
        return
    re0, re1, im0, im1 = region
    center = complex(0.5 * (re0 + re1), 0.5 * (im0 + im1))
    if winding == 1 or max(re1 - re0, im1 - im0) < 1e3 * tol:
        root = _newton_polish(params, center, tol)
        if root is not None and re0 - tol <= root.real <= re1 + tol \
                and im0 - tol <= root.imag <= im1 + tol:
            if all(abs(root - r) > 1e3 * tol for r in found):
                found.append(root)
            return
    if depth > 24:
        raise ContourError(f"pole search failed to isolate {winding} zero(s) in {region}")
    rm = 0.5 * (re0 + re1)
    im = 0.5 * (im0 + im1)
    for sub in ((re0, rm, im0, im), (rm, re1, im0, im),
                (re0, rm, im, im1), (rm, re1, im, im1)):
        _search(params, sub, depth + 1, tol, found)


def find_poles_second_sheet(params: ModelParams, region) -> PoleReport:
    """Locate second-sheet poles of G_aa inside a rectangle by the argument
    principle, then polish each zero by Newton iteration.

    region = (re_min, re_max, im_min, im_max) with Re strictly inside the
    band and im_max at most a small positive margin above the real axis.
    """
    re0, re1, im0, im1 = (float(v) for v in region)
    edge = params.band_edge
    if not (-edge < re0 < re1 < edge):
        raise DomainError(f"search region {region} must lie strictly inside the band")
    if im1 > 0.5 * params.kappa0:
        raise DomainError("im_max must stay close to the real axis (second-sheet sector)")
    tol = 1e-13 * max(1.0, params.kappa0)
    found: list[complex] = []
    _search(params, (re0, re1, im0, im1), 0, tol, found)
    poles = []
    for z in sorted(found, key=lambda w: (w.real, w.imag)):
        fp = 1.0 - selfenergy.sigma_derivative(params, z, Sheet.SECOND)
        poles.append(Pole(z=z, residue=1.0 / fp, sheet=Sheet.SECOND))
    return PoleReport(poles=tuple(poles), search_region=(re0, re1, im0, im1))


# ---------------------------------------------------------------------------
# Bromwich-line survival amplitude


def _gauss_panels(a: float, b: float, panel_width: float, n_nodes: int = 12):
    nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
    n_panels = max(1, int(math.ceil((b - a) / panel_width)))
    edges = np.linspace(a, b, n_panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return x, w


def survival_amplitude_bromwich(params: ModelParams, t_grid, b: float | None = None,
                                line_halfwidth: float | None = None) -> BromwichResult:
    """Survival amplitude c_a(t) from line quadrature of the inverse-Laplace
    representation, for parameters with a purely continuous spectrum.

    c_a(t) = (i/2pi) * int G_aa(x + ib) exp(-i(x+ib)t) dx, |x| <= L, with the
    rational reference handled analytically (see module docstring).  Returns
    amplitudes together with a per-time truncation-error estimate.
    """
    t = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if np.any(t < 0.0):
        raise DomainError("all times must be >= 0")
    if not spectrum.spectrum_is_real(params):
        raise RealSpectrumRequiredError(
            "Bromwich survival amplitude requires an empty point spectrum")
    k0 = params.kappa0
    if b is None:
        b = 0.5 * k0
    if b <= 0.0:
        raise DomainError("the line offset b must be positive")
    L = 40.0 * k0 if line_halfwidth is None else float(line_halfwidth)

    # rational reference matching G_aa through order 1/z^3
    z_c = -1j * max(k0, b)
    a2 = params.ea - z_c
    a3 = params.ea**2 + params.kappa_a**2 - 2.0 * params.ea * z_c + z_c**2

    t_max = float(np.max(t, initial=0.0))
    panel = min(0.25 * k0, 0.5 * b)
    if t_max > 0.0:
        panel = min(panel, 6.0 / t_max)
    x, w = _gauss_panels(-L, L, panel)
    z = x + 1j * b

    def reference(zz):
        return 1.0 / (zz - z_c) + a2 / (zz - z_c) ** 2 + a3 / (zz - z_c) ** 3

    sig = selfenergy.sigma_grid(params, z) if params.kappa_a > 0 else np.zeros_like(z)
    f = 1.0 / (z - params.ea - sig) - reference(z)

    phase = np.exp(-1j * np.outer(t, x))  # (n_t, n_x)
    line = (1j / (2.0 * math.pi)) * np.exp(b * t) * (phase @ (w * f))

    analytic = np.exp(-1j * z_c * t) * (1.0 - 1j * a2 * t - 0.5 * a3 * t**2)
    amplitude = analytic + line

    edge_mag = abs(f[0]) + abs(f[-1])
    with np.errstate(divide="ignore"):
        window = np.minimum(np.where(t > 0, 1.0 / np.maximum(t, 1e-300), np.inf), L / 3.0)
    estimate = np.exp(b * t) * edge_mag * window / (2.0 * math.pi)
    return BromwichResult(t=t, amplitude=amplitude, truncation_estimate=estimate)


def survival_asymptote(params: ModelParams) -> SurvivalAsymptote | None:
    """Predicted long-time level of the survival probability from the real
    second-sheet poles, or None when the amplitude decays to zero.

    One real pole: plateau |R1|^2.  Two real poles: time-averaged level
    |R1|^2 + |R2|^2 plus the beat frequency |z1 - z2|.
    """
    if not spectrum.spectrum_is_real(params):
        raise RealSpectrumRequiredError("asymptote defined for purely continuous spectra")
    if not params.amplifying():
        return None
    try:
        report = spectrum.find_singularities(params, tol=1e-9)
    except spectrum.HermitianInputError:
        return None
    if report.count == 0:
        return None
    poles = []
    for s in report.singularities:
        fp = 1.0 - selfenergy.sigma_derivative(params, complex(s.energy), Sheet.SECOND)
        poles.append(Pole(z=complex(s.energy), residue=1.0 / fp, sheet=Sheet.SECOND))
    level = sum(abs(p.residue) ** 2 for p in poles)
    beat = abs(poles[0].z - poles[1].z) if len(poles) == 2 else None
    return SurvivalAsymptote(level=level, beat_frequency=beat, poles=tuple(poles))
