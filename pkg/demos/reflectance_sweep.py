#!/usr/bin/env python3
"""Reflectance of band plane waves off the impurity-terminated boundary.

Three regimes: Hermitian impurity (R identically 1), gain below the
singularity threshold (finite resonant enhancement), and gain exactly at
the threshold (true divergence at the singularity momentum).  Also shows
the gain/loss reciprocity R(k; Ea) * R(k; Ea*) = 1.
"""

import math

import numpy as np

import ffalattice as ffa

k_grid = ffa.default_k_grid(400)

print("== Hermitian impurity: unimodular reflection ==")
herm = ffa.ModelParams(1.0, 1.0, 0.5)
rs = np.array([ffa.reflectance(herm, float(k)) for k in k_grid])
print(f"  max |R - 1| over the band: {np.max(np.abs(rs - 1.0)):.2e}")

print("\n== sub-threshold gain, Im Ea = 1/3: resonance without divergence ==")
sub = ffa.ModelParams(1.0, 1.0, 1j / 3.0)
rs = np.array([ffa.reflectance(sub, float(k)) for k in k_grid])
kmax = float(k_grid[int(np.argmax(rs))])
print(f"  peak R = {np.max(rs):.4f} at k = {kmax:.4f} (band center pi/2 = {math.pi/2:.4f})")
print(f"  spot value R(pi/2) = {ffa.reflectance(sub, math.pi/2):.6f} (exactly 4)")

print("\n== at threshold, Im Ea = 1: divergence at the singularity ==")
crit = ffa.ModelParams(1.0, 1.0, 1j)
for k in (math.pi / 2 - 0.01, math.pi / 2 - 1e-4, math.pi / 2):
    sample = ffa.reflectance_sample(crit, k)
    shown = "divergent" if sample.divergent else f"{sample.reflectance:.4g}"
    print(f"  R(k = pi/2 {k - math.pi/2:+.1e}) = {shown}")

print("\n== gain/loss reciprocity ==")
gain = ffa.ModelParams(1.0, 1.0, 0.2 + 0.6j)
loss = ffa.ModelParams(1.0, 1.0, 0.2 - 0.6j)
prod = [ffa.reflectance(gain, float(k)) * ffa.reflectance(loss, float(k))
        for k in k_grid]
print(f"  max |R_gain * R_loss - 1| = {max(abs(x - 1.0) for x in prod):.2e}")

print("\n== singularity location read off the scattering divergence ==")
report = ffa.singularity_from_scattering(ffa.ModelParams(1.0, math.sqrt(2.0), 1j))
print(f"  energies: {[f'{e:+.6f}' for e in report.energies]} (expect +-sqrt(3))")
