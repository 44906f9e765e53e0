#!/usr/bin/env python3
"""Map the parameter region where the spectrum stays purely real.

Scans the (kappa_a/kappa0, Im Ea/kappa0) plane and prints a coarse ASCII
rendering: '#' marks parameters with a purely continuous real spectrum,
'.' marks parameters supporting complex bound states.  The real region
is bounded by |Im Ea| = kappa_a^2/kappa0 and disappears entirely above
kappa_a = sqrt(2) kappa0.
"""

import math

import numpy as np

import ffalattice as ffa

ratios = np.linspace(0.05, 1.95, 39)
ims = np.linspace(-2.8, 2.8, 57)
grid = ffa.reality_domain_scan(ratios, ims, re_ea_over_kappa0=0.0)

print("rows: kappa_a/kappa0 from 0.05 (top) to 1.95; cols: Im Ea in [-2.8, 2.8]")
for i, r in enumerate(ratios):
    line = "".join("#" if grid[i, j] else "." for j in range(ims.size))
    marker = " <- sqrt(2)" if abs(r - math.sqrt(2.0)) < 0.03 else ""
    print(f"  {r:4.2f} {line}{marker}")

frac = float(np.mean(grid))
print(f"\nreal-spectrum fraction of the scan: {frac:.3f}")

print("\nspot checks on the boundary curve Im Ea = kappa_a^2/kappa0:")
for ka in (0.8, 1.2, 1.41):
    inside = ffa.spectrum_is_real(ffa.ModelParams(1.0, ka, 1j * (ka**2 - 1e-3)))
    outside = ffa.spectrum_is_real(ffa.ModelParams(1.0, ka, 1j * (ka**2 + 1e-3)))
    print(f"  kappa_a={ka}: just below boundary real={inside}, just above real={outside}")
