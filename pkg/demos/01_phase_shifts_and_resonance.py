# Phase shifts of the flux tube and the resonance produced by a bound state.
#
# Flux alpha = 0.25 (n = 0, eta = 0.25) with a bound state |E_0| = 1 in the
# l = 0 channel.  The correction Delta_0 runs from pi (E << |E_0|, same as no
# correction mod pi) through pi/2 at the resonance down to eta*pi (E >> |E_0|).

import math

import numpy as np

from abvortex import (ExtensionSpec, decompose_flux, find_resonance_numeric, resonance_energy,
                      total_phase_shift)
from abvortex.phase import resonance_bracket

flux = decompose_flux(0.25)
spec = ExtensionSpec(e_bound_n=1.0)
print(flux, "modified channels:", flux.modified_channels)

print(f"{'E':>10} {'delta0':>10} {'Delta':>10} {'Delta/pi':>10}")
for energy in np.geomspace(1e-3, 1e3, 13):
    ph = total_phase_shift(0, flux, energy, spec)
    print(f"{energy:10.4g} {ph.delta0:10.5f} {ph.correction:10.5f} {ph.correction / math.pi:10.5f}")

res = resonance_energy(flux, spec)
num = find_resonance_numeric(flux, spec, 0, resonance_bracket(flux, spec, 0))
print(f"\nresonance: closed form {res.energy:.15g}, bisection {num:.15g}")

# The closed form only covers 0 < eta < 1/2.  For eta > 1/2 the resonance
# sits in l = -n-1 and is found numerically.
flux = decompose_flux(0.75)
spec = ExtensionSpec(e_bound_n1=1.0)
print(resonance_energy(flux, spec))
print("l=-1 resonance (numeric):",
      find_resonance_numeric(flux, spec, -1, resonance_bracket(flux, spec, -1)))

# Resonance energy against eta: it diverges as eta -> 1/2.
for eta in (0.05, 0.15, 0.25, 0.35, 0.45, 0.49):
    print(f"eta={eta:.2f}  E_res/|E_-n| = {resonance_energy(decompose_flux(eta), ExtensionSpec(1.0)).energy:.6g}")
