#!/usr/bin/env python3
"""Tour of the continuum self-energy and its branch structure.

Walks through the closed form against the integral oracle, the boundary
values on both lips of the band cut, and the analytic continuation onto
the second Riemann sheet where resonance poles live.
"""

import math

import numpy as np

import ffalattice as ffa
from ffalattice.selfenergy import (
    delta_quadrature_oracle,
    delta_shift,
    sigma,
    sigma_boundary,
    sigma_quadrature_oracle,
    sigma_second_sheet,
)

p = ffa.ModelParams(kappa0=1.0, kappa_a=1.0, ea=0.0)

print("== closed form vs quadrature oracle ==")
for z in (3.0, 2j, -1.5 + 0.8j, 0.3 - 2.0j):
    closed = sigma(p, z)
    oracle = sigma_quadrature_oracle(p, z)
    print(f"  sigma({z}) = {closed:.12g}   |closed - oracle| = {abs(closed - oracle):.2e}")

print("\n== boundary values across the band cut ==")
print("  E      Delta(E)        -Im sigma / pi  (should equal V(E))")
for e in np.linspace(-1.8, 1.8, 7):
    s_up = sigma_boundary(p, float(e), side=+1)
    v = ffa.spectral_density(p, float(e))
    print(f"  {e:+.2f}  {s_up.real:+.6f}      {-s_up.imag / math.pi:.6f}  vs  {v:.6f}")

print("\n== level shift inside and outside the band ==")
for e in (-3.0, -1.0, 0.5, 2.5):
    print(f"  Delta({e:+.1f}) = {delta_shift(p, e):+.10f}"
          f"   PV oracle {delta_quadrature_oracle(p, e):+.10f}")

print("\n== second sheet: continuation through the cut ==")
# approaching a band energy from above on sheet I equals approaching it
# from below on sheet II; that continuity is what hosts resonance poles
for e in (-1.0, 0.0, 1.0):
    up = sigma(p, e + 1e-8j)
    down = sigma_second_sheet(p, e - 1e-8j)
    print(f"  E={e:+.1f}: sheet I from above {up:.8f}  sheet II from below {down:.8f}")
print(f"  sigma_II(0) = {sigma_second_sheet(p, 0j):.6f}  (pure -i for unit hoppings)")
