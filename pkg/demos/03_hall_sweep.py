# Hall resistivity of dilute vortices against flux.
#
# rho_xy is in units of hc^2/e^2; n_v/n_e = 0.01.  Each value is also
# obtained by integrating sin(phi) * dsigma/dphi numerically, the
# rho_xy_quadrature column.  The curve is periodic in alpha with period 1 and
# vanishes at integer flux.

import warnings

import numpy as np

from abvortex import ExtensionSpec, hall_sweep
from abvortex.errors import IntegerFluxWarning

warnings.simplefilter("ignore", IntegerFluxWarning)

spec = ExtensionSpec(e_bound_n=1.0, e_bound_n1=1.0)
alphas = np.linspace(0.0, 2.0, 21)
results = hall_sweep(0.01, 1.0, alphas, 2.0, spec)

print(f"{'alpha':>6} {'rho_xy':>14} {'quadrature':>14}")
for alpha, res in results:
    print(f"{alpha:6.2f} {res.rho_xy:14.6e} {res.rho_xy_quadrature:14.6e}")

# energies that scale with eta
results = hall_sweep(0.01, 1.0, [0.2, 0.4, 0.6, 0.8], 2.0,
                     lambda flux: ExtensionSpec(1.0 + flux.eta, 2.0 - flux.eta))
print([round(r.rho_xy, 6) for _, r in results])
