"""End-to-end acceptance gates.

Each test pins one quantitative claim about the library at a stated
tolerance and runtime budget and prints a single summary line.
"""

import math
import time

import numpy as np
import pytest

import ffalattice as ffa
from ffalattice.dynamics import initial_packet, wavepacket_lattice_size
from ffalattice.selfenergy import delta_shift, sigma, sigma_boundary
from ffalattice.spectrum import fano_z


def _report(name: str, ok: bool, elapsed: float, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name} ({elapsed:.2f}s) {detail}")


def test_criterion_1_singularity_locations():
    t0 = time.time()
    found = ffa.find_singularities(ffa.ModelParams(1.0, 1.0, 1j))
    assert found.count == 1
    assert abs(found.energies[0]) <= 1e-9
    assert abs(found.momenta[0] - math.pi / 2.0) <= 1e-9
    for im in (1.0 / 3.0, 2.0 / 3.0):
        assert ffa.find_singularities(ffa.ModelParams(1.0, 1.0, 1j * im)).count == 0
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report("singularity locations", True, elapsed)


def test_criterion_2_two_singularity_case():
    t0 = time.time()
    p = ffa.ModelParams(1.0, math.sqrt(2.0), 1j)
    spec_route = ffa.find_singularities(p)
    scat_route = ffa.singularity_from_scattering(p)
    target = sorted([-math.sqrt(3.0), math.sqrt(3.0)])
    for route in (spec_route, scat_route):
        assert route.count == 2
        assert sorted(route.energies) == pytest.approx(target, abs=1e-9)
    for e0 in spec_route.energies:
        zc = fano_z(p, e0).conjugate()
        assert abs(math.pi**2 + zc * zc) < 1e-8
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report("two-singularity case", True, elapsed)


def test_criterion_3_reflectance_laws():
    t0 = time.time()
    k_grid = ffa.default_k_grid(2000)

    herm = ffa.ModelParams(1.0, 1.0, 0.5)
    r_h = np.array([ffa.reflectance(herm, float(k)) for k in k_grid])
    assert np.max(np.abs(r_h - 1.0)) < 1e-12

    gain = ffa.ModelParams(1.0, 1.0, 0.3 + 0.6j)
    loss = ffa.ModelParams(1.0, 1.0, 0.3 - 0.6j)
    r_g = np.array([ffa.reflectance(gain, float(k)) for k in k_grid])
    r_l = np.array([ffa.reflectance(loss, float(k)) for k in k_grid])
    assert np.max(np.abs(r_g * r_l - 1.0)) < 1e-10
    assert np.all(r_g >= 1.0) and np.all(r_l <= 1.0)

    spot = ffa.reflectance(ffa.ModelParams(1.0, 1.0, 1j / 3.0), math.pi / 2.0)
    assert spot == pytest.approx(4.0, abs=1e-12)
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report("reflectance laws", True, elapsed, f"spot R(pi/2)={spot:.12f}")


def test_criterion_4_self_energy_oracle():
    t0 = time.time()
    p = ffa.ModelParams(1.0, 1.2, 0.0)
    xs = np.linspace(-4.0, 4.0, 20)
    ys = np.concatenate([np.linspace(-4.0, -0.35, 10), np.linspace(0.35, 4.0, 10)])
    worst = 0.0
    for x in xs:
        for y in ys:
            z = complex(x, y)
            closed = sigma(p, z)
            oracle = ffa.sigma_quadrature_oracle(p, z)
            worst = max(worst, abs(closed - oracle) / abs(oracle))
    assert worst < 1e-6

    c = p.kappa_a**2 / 2.0
    for e in np.linspace(-1.95, 1.95, 31):
        v = (p.kappa_a**2 / math.pi) * math.sqrt(1.0 - (e / 2.0) ** 2)
        assert abs(sigma_boundary(p, float(e), +1) - (c * e - 1j * math.pi * v)) < 1e-9
        assert abs(sigma_boundary(p, float(e), -1) - (c * e + 1j * math.pi * v)) < 1e-9

    eps = 1e-13
    for edge in (2.0, -2.0):
        inside = delta_shift(p, edge - math.copysign(eps, edge))
        outside = delta_shift(p, edge + math.copysign(eps, edge))
        assert abs(inside - outside) < 1e-6
    elapsed = time.time() - t0
    assert elapsed < 10.0
    _report("self-energy oracle", True, elapsed, f"max rel err {worst:.2e}")


def test_criterion_5_reality_domain():
    t0 = time.time()
    n = 200
    ratios = np.linspace(0.0, 2.0, n)
    ims = np.linspace(-3.0, 3.0, n)
    grid = ffa.reality_domain_scan(ratios, ims, 0.0)
    d_im = ims[1] - ims[0]
    s2 = math.sqrt(2.0)
    for i, r in enumerate(ratios):
        col = grid[i]
        real_ims = ims[col]
        if r > s2 + (ratios[1] - ratios[0]):
            assert real_ims.size == 0
        elif real_ims.size:
            # boundary of the real region lies at |Im Ea| = kappa_a^2/kappa0
            assert abs(np.max(np.abs(real_ims)) - r * r) <= d_im
    elapsed = time.time() - t0
    assert elapsed < 30.0
    _report("reality domain", True, elapsed)


def test_criterion_6_wavepacket_scattering():
    t0 = time.time()
    amp = ffa.ModelParams(1.0, 1.0, 1j)
    ab = ffa.ModelParams(1.0, 1.0, -1j)

    on_res = ffa.WavePacketSpec(n0=30, delta_n=7.0, k=math.pi / 2.0)
    gain_amp = ffa.run_wavepacket(amp, on_res, 40.0).gain
    gain_abs = ffa.run_wavepacket(ab, on_res, 40.0).gain
    assert gain_amp > 1e2
    assert gain_abs < 1e-2

    off = ffa.WavePacketSpec(n0=42, delta_n=10.0, k=3.0 * math.pi / 10.0)
    t_final = 55.0
    n_sites = wavepacket_lattice_size(amp, off, t_final)
    c0 = initial_packet(off, n_sites)
    kk = np.linspace(1e-4, math.pi - 1e-4, 4000)
    ns = np.arange(1, n_sites + 1)
    weight = np.abs(np.exp(1j * np.outer(kk, ns)) @ c0) ** 2
    for p in (amp, ab):
        measured = ffa.run_wavepacket(p, off, t_final).gain
        r_of_k = np.array([ffa.reflectance(p, float(q)) for q in kk])
        oracle = float(np.trapezoid(weight * r_of_k, kk)
                       / np.trapezoid(weight, kk))
        assert abs(measured - oracle) / oracle < 0.05
    elapsed = time.time() - t0
    assert elapsed < 30.0
    _report("wave-packet scattering", True, elapsed,
            f"gain(amp)={gain_amp:.1f} gain(abs)={gain_abs:.2e}")


def test_criterion_7_decay_dynamics():
    t0 = time.time()

    t, prob, _ = ffa.run_decay(ffa.ModelParams(1.0, 1.0, -1j), 50.0)
    assert prob[-1] < 1e-3

    single = ffa.ModelParams(1.0, 1.0, 1j)
    report = ffa.find_poles_second_sheet(single, (-1.95, 1.95, -3.0, 0.25))
    predicted = sum(abs(p.residue) ** 2 for p in report.poles
                    if abs(p.z.imag) < 1e-6)
    t, prob, _ = ffa.run_decay(single, 40.0)
    plateau = float(np.mean(prob[t >= 30.0]))
    assert abs(plateau - predicted) / predicted < 0.05

    double = ffa.ModelParams(1.0, math.sqrt(2.0), 1j)
    t, prob, _ = ffa.run_decay(double, 40.0)
    omega = ffa.dominant_frequency(t, prob, t_min=10.0)
    assert abs(omega - 2.0 * math.sqrt(3.0)) / (2.0 * math.sqrt(3.0)) < 0.02

    worst = 0.0
    for p in (single, double, ffa.ModelParams(1.0, 1.0, -1j)):
        t, prob, amp = ffa.run_decay(p, 20.0)
        res = ffa.survival_amplitude_bromwich(p, t)
        worst = max(worst, float(np.max(np.abs(res.amplitude - amp))))
    assert worst < 1e-3
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report("decay dynamics", True, elapsed,
            f"plateau={plateau:.4f} omega={omega:.4f} bromwich err {worst:.1e}")


def test_criterion_8_bound_state_oracle():
    t0 = time.time()
    n_sites = 400
    band_margin = 1e-2
    rng = np.random.default_rng(2024)
    checked = 0
    while checked < 20:
        ka = rng.uniform(0.2, 1.9)
        ea = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        p = ffa.ModelParams(1.0, ka, ea)
        rep = ffa.bound_states(p)
        margins = [abs(abs(x) - 1.0) for x in (rep.xi1, rep.xi2)]
        if min(margins) < 0.05:
            continue  # finite-lattice localization too slow near |xi| = 1
        ev = ffa.finite_lattice_eigenvalues(p, n_sites)
        dist = np.maximum(np.abs(ev.real) - 2.0, 0.0) + np.abs(ev.imag)
        outliers = ev[dist > band_margin]
        assert (outliers.size > 0) == rep.has_bound_states
        for e in rep.bound_energies:
            assert np.min(np.abs(outliers - e)) < 1e-3
        checked += 1

    herm = ffa.ModelParams(1.0, 2.0, 0.0)
    ev = ffa.finite_lattice_eigenvalues(herm, n_sites)
    outliers = np.sort(ev.real[np.abs(ev.real) > 2.0 + band_margin])
    assert outliers == pytest.approx([-2.3094, 2.3094], abs=1e-3)
    elapsed = time.time() - t0
    assert elapsed < 30.0
    _report("bound-state oracle", True, elapsed, f"{checked} parameter sets")


def test_criterion_9_one_sided_divergence():
    t0 = time.time()
    amp = ffa.ModelParams(1.0, 1.0, 1j)
    assert abs(ffa.g_aa(amp, 0.0 + 1e-6j)) > 1e5
    assert abs(ffa.g_aa(amp, 0.0 - 1e-6j)) < 10.0
    ab = ffa.ModelParams(1.0, 1.0, -1j)
    assert abs(ffa.g_aa(ab, 0.0 - 1e-6j)) > 1e5
    assert abs(ffa.g_aa(ab, 0.0 + 1e-6j)) < 10.0
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report("one-sided resolvent divergence", True, elapsed)
