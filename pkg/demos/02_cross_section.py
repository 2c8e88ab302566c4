# Differential cross section: standard AB, closed expansion, amplitude oracle.
#
# With a bound state the closed expansion is no longer symmetric under
# phi -> -phi.  The oracle column squares the partial-wave amplitude; the two
# differ (see abvortex/data/reconciliation.md).

import math

import numpy as np

from abvortex import (ExtensionSpec, amplitude_oracle, asymmetry, decompose_flux,
                      modified_cross_section, standard_cross_section)

alpha, energy = 0.25, 2.0
k = math.sqrt(energy)     # natural units, hbar = 2m = 1
flux = decompose_flux(alpha)
spec = ExtensionSpec(e_bound_n=1.0)

phi = np.array([-3.0, -2.0, -1.0, -0.3, 0.3, 1.0, 2.0, 3.0])
std = standard_cross_section(k, phi, alpha)
closed = modified_cross_section(k, phi, flux, energy, spec)
oracle = amplitude_oracle(k, phi, flux, energy, spec).cross_section

print(f"{'phi':>6} {'standard':>12} {'closed':>12} {'|f|^2':>12}")
for row in zip(phi, std, closed, oracle):
    print("{:6.2f} {:12.5g} {:12.5g} {:12.5g}".format(*row))

print("\nasymmetry dsigma(phi) - dsigma(-phi):")
for p in (0.5, 1.0, math.pi / 2, 2.5):
    print(f"  phi={p:.3f}: {asymmetry(k, p, flux, energy, spec):+.6g}")

# Without bound states everything is symmetric and equal to the standard result.
print("conventional asymmetry at phi=1:", asymmetry(k, 1.0, flux, energy, ExtensionSpec()))
