"""Time-domain integration of the truncated-lattice Schrödinger system.

State: impurity amplitude c_a plus site amplitudes c_1..c_N with a hard
wall at site N.  A classical fixed-step 4th-order scheme keeps runs
reproducible bit-for-bit; the lattice is sized so the far wall never
matters, with a runtime guard that turns contamination into an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InsufficientLatticeError, StepSizeError
from .model import ModelParams

_WALL_GUARD_SITES = 3
_WALL_GUARD_NORM = 1e-10


@dataclass(frozen=True)
class LatticeState:
    t: float
    c_a: complex
    c_sites: np.ndarray

    def __post_init__(self):
        sites = np.asarray(self.c_sites, dtype=complex)
        if sites.size < 2:
            raise DomainError("lattice needs at least 2 sites")
        if not (np.all(np.isfinite(sites.view(float))) and math.isfinite(abs(self.c_a))):
            raise DomainError("amplitudes must be finite")
        object.__setattr__(self, "c_sites", sites)

    @property
    def total_norm(self) -> float:
        return abs(self.c_a) ** 2 + float(np.sum(np.abs(self.c_sites) ** 2))


@dataclass(frozen=True)
class WavePacketSpec:
    """Gaussian packet c_n(0) = exp(-(n - n0)^2/dn^2 - i*k*n), impurity empty."""

    n0: int
    delta_n: float
    k: float
    normalize: bool = False

    def __post_init__(self):
        if not 0.0 < self.k < math.pi:
            raise DomainError(f"packet momentum k={self.k} outside (0, pi)")
        if self.delta_n <= 0:
            raise DomainError("packet width must be positive")
        if self.n0 - 4.0 * self.delta_n <= 1.0:
            raise DomainError("packet must start clear of the boundary "
                              "(n0 - 4*delta_n > 1)")


@dataclass(frozen=True)
class WavePacketResult:
    snapshots: list[LatticeState]
    reflected_norm: float
    incident_norm: float
    gain: float
    window: tuple[int, int] = field(default=(0, 0))


def default_time_step(params: ModelParams) -> float:
    """Fixed step keeping the explicit scheme well inside its stability
    region (spectral radius about 2*kappa0 + |Ea|)."""
    return min(1e-2, 0.05 / max(params.kappa0, params.kappa_a, abs(params.ea)))


def _rhs(params: ModelParams, c_a: complex, c: np.ndarray):
    dc = np.empty_like(c)
    dc[1:-1] = 1j * params.kappa0 * (c[2:] + c[:-2])
    dc[0] = 1j * (params.kappa0 * c[1] + params.kappa_a * c_a)
    dc[-1] = 1j * params.kappa0 * c[-2]  # hard wall: c_{N+1} = 0
    dca = 1j * (params.kappa_a * c[0] - params.ea * c_a)
    return dca, dc


def _rk4(params: ModelParams, c_a: complex, c: np.ndarray, dt: float):
    k1a, k1 = _rhs(params, c_a, c)
    k2a, k2 = _rhs(params, c_a + 0.5 * dt * k1a, c + 0.5 * dt * k1)
    k3a, k3 = _rhs(params, c_a + 0.5 * dt * k2a, c + 0.5 * dt * k2)
    k4a, k4 = _rhs(params, c_a + dt * k3a, c + dt * k3)
    return (c_a + dt / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a),
            c + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4))


def step(params: ModelParams, state: LatticeState, dt: float,
         max_local_error: float | None = None) -> LatticeState:
    """Advance one explicit 4th-order step.

    With max_local_error set, a step-doubling estimate is computed and the
    step is rejected (StepSizeError) when it exceeds the tolerance.
    """
    if dt <= 0.0:
        raise DomainError("dt must be positive")
    c_a, c = _rk4(params, state.c_a, state.c_sites, dt)
    if max_local_error is not None:
        ha, h = _rk4(params, state.c_a, state.c_sites, 0.5 * dt)
        ha, h = _rk4(params, ha, h, 0.5 * dt)
        err = math.sqrt(abs(c_a - ha) ** 2 + float(np.sum(np.abs(c - h) ** 2)))
        if err > max_local_error:
            raise StepSizeError(f"local error {err:.3e} exceeds {max_local_error:.3e}")
    return LatticeState(t=state.t + dt, c_a=c_a, c_sites=c)


def _check_wall(c: np.ndarray, t: float):
    tail = float(np.sum(np.abs(c[-_WALL_GUARD_SITES:]) ** 2))
    if tail > _WALL_GUARD_NORM:
        raise InsufficientLatticeError(
            f"norm {tail:.2e} reached the hard wall at t={t:.3f}; enlarge the lattice")


def _integrate(params: ModelParams, c_a: complex, c: np.ndarray, t_final: float,
               dt: float, n_records: int, record, guard_wall: bool = True):
    """Drive RK4 to t_final, invoking record(t, c_a, c) at ~n_records times."""
    n_steps = max(1, int(math.ceil(t_final / dt)))
    dt = t_final / n_steps
    every = max(1, n_steps // max(1, n_records))
    record(0.0, c_a, c)
    for i in range(1, n_steps + 1):
        c_a, c = _rk4(params, c_a, c, dt)
        if i % every == 0 or i == n_steps:
            t = i * dt
            if guard_wall:
                _check_wall(c, t)
            record(t, c_a, c)
    return c_a, c


def wavepacket_lattice_size(params: ModelParams, spec: WavePacketSpec, t_final: float) -> int:
    """Far-wall placement: initial support plus maximal ballistic spread."""
    return int(math.ceil(spec.n0 + 4.0 * spec.delta_n
                         + 2.5 * (2.0 * params.kappa0) * t_final))


def decay_lattice_size(params: ModelParams, t_final: float) -> int:
    return int(math.ceil(40.0 + 2.5 * (2.0 * params.kappa0) * t_final))


def initial_packet(spec: WavePacketSpec, n_sites: int) -> np.ndarray:
    n = np.arange(1, n_sites + 1)
    c = np.exp(-((n - spec.n0) / spec.delta_n) ** 2 - 1j * spec.k * n)
    if spec.normalize:
        c = c / math.sqrt(float(np.sum(np.abs(c) ** 2)))
    return c.astype(complex)


def reflected_window(params: ModelParams, spec: WavePacketSpec, t_final: float,
                     n_sites: int) -> tuple[int, int]:
    """Sites where the freely-propagated outgoing lobe sits at t_final.

    The packet moves toward the boundary at group speed 2*kappa0*sin(k),
    bounces, and returns at the same speed; the window is 8*delta_n wide
    around the ballistic outgoing center.
    """
    v = 2.0 * params.kappa0 * math.sin(spec.k)
    center = v * t_final - spec.n0
    lo = max(1, int(math.floor(center - 4.0 * spec.delta_n)))
    hi = min(n_sites, int(math.ceil(center + 4.0 * spec.delta_n)))
    return lo, hi


def run_wavepacket(params: ModelParams, spec: WavePacketSpec, t_final: float,
                   dt: float | None = None, n_snapshots: int = 100) -> WavePacketResult:
    """Scatter a Gaussian packet off the boundary and quantify the gain
    reflected_norm / incident_norm over the outgoing support window."""
    if t_final <= 0.0:
        raise DomainError("t_final must be positive")
    if dt is None:
        dt = default_time_step(params)
    n_sites = wavepacket_lattice_size(params, spec, t_final)
    c = initial_packet(spec, n_sites)
    incident = float(np.sum(np.abs(c) ** 2))
    snapshots: list[LatticeState] = []

    def record(t, ca, cs):
        snapshots.append(LatticeState(t=t, c_a=ca, c_sites=cs.copy()))

    _integrate(params, 0.0 + 0.0j, c, t_final, dt, n_snapshots, record)
    lo, hi = reflected_window(params, spec, t_final, n_sites)
    final = snapshots[-1].c_sites
    reflected = float(np.sum(np.abs(final[lo - 1:hi]) ** 2))
    return WavePacketResult(snapshots=snapshots, reflected_norm=reflected,
                            incident_norm=incident, gain=reflected / incident,
                            window=(lo, hi))


def run_decay(params: ModelParams, t_final: float, dt: float | None = None,
              legacy_site_init: bool = False):
    """Survival probability P(t) = |c_a(t)|^2 from c_a(0) = 1.

    Sites start empty; legacy_site_init=True instead sets every site
    amplitude to 1 (uniform boundary excitation reading).
    """
    if t_final <= 0.0:
        raise DomainError("t_final must be positive")
    if dt is None:
        dt = default_time_step(params)
    n_sites = decay_lattice_size(params, t_final)
    c = np.ones(n_sites, dtype=complex) if legacy_site_init else np.zeros(n_sites, dtype=complex)
    times: list[float] = []
    amps: list[complex] = []

    def record(t, ca, cs):
        times.append(t)
        amps.append(ca)

    _integrate(params, 1.0 + 0.0j, c, t_final, dt, n_records=4000, record=record,
               guard_wall=not legacy_site_init)
    t_arr = np.array(times)
    a_arr = np.array(amps)
    return t_arr, np.abs(a_arr) ** 2, a_arr


def dominant_frequency(t: np.ndarray, values: np.ndarray, t_min: float = 0.0) -> float:
    """Angular frequency of the strongest oscillation in a uniformly sampled
    signal, found by windowed FFT with parabolic peak interpolation."""
    t = np.asarray(t, dtype=float)
    v = np.asarray(values, dtype=float)
    sel = t >= t_min
    ts, vs = t[sel], v[sel]
    if ts.size < 8:
        raise DomainError("signal too short for a frequency estimate")
    vs = vs - np.mean(vs)
    dt = ts[1] - ts[0]
    spec = np.abs(np.fft.rfft(vs * np.hanning(vs.size)))
    freqs = np.fft.rfftfreq(vs.size, dt) * 2.0 * math.pi
    i = int(np.argmax(spec[1:]) + 1)
    if 0 < i < spec.size - 1 and spec[i - 1] > 0 and spec[i + 1] > 0:
        a, b, c = np.log(spec[i - 1]), np.log(spec[i]), np.log(spec[i + 1])
        denom = a - 2.0 * b + c
        if denom != 0.0:
            return float(freqs[i] + 0.5 * (a - c) / denom * (freqs[1] - freqs[0]))
    return float(freqs[i])


def finite_lattice_matrix(params: ModelParams, n_sites: int) -> np.ndarray:
    """(N+1)x(N+1) matrix of the truncated Hamiltonian; index 0 is the
    impurity, 1..N the lattice sites."""
    if n_sites < 4:
        raise DomainError("need at least 4 lattice sites")
    h = np.zeros((n_sites + 1, n_sites + 1), dtype=complex)
    h[0, 0] = params.ea
    h[0, 1] = h[1, 0] = -params.kappa_a
    for i in range(1, n_sites):
        h[i, i + 1] = h[i + 1, i] = -params.kappa0
    return h


def finite_lattice_eigenvalues(params: ModelParams, n_sites: int) -> np.ndarray:
    """Brute-force eigenvalues of the truncated lattice; the oracle used to
    validate the bound-state criterion."""
    return np.linalg.eigvals(finite_lattice_matrix(params, n_sites))
