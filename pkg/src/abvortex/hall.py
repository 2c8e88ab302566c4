"""Hall resistivity of a dilute array of flux tubes (single-scattering limit)."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .cross_section import skew_bracket, transverse_from_corrections
from .errors import InvalidInputError
from .flux import (ExtensionSpec, FluxDecomposition, Kinematics, check_energy,
                   decompose_flux, validate_extension, wavenumber)
from .phase import corrections


@dataclass(frozen=True)
class HallResult:
    """rho_xy in units of hc^2/e^2 (times ``hc2_over_e2`` in explicit units)."""

    rho_xy: float
    rho_xy_quadrature: float
    n_v: float
    n_e: float
    hc2_over_e2: float = 1.0


def _check_density(name, value):
    value = float(value)
    if not (value > 0.0 and math.isfinite(value)):
        raise InvalidInputError(f"{name} must be a positive density, got {value!r}")
    return value


def hall_from_corrections(n_v, n_e, flux, delta_n, delta_n1, k=1.0,
                          hc2_over_e2=1.0, quadrature_steps=2 ** 14) -> HallResult:
    n_v = _check_density("n_v", n_v)
    n_e = _check_density("n_e", n_e)
    rho = 4.0 * n_v / n_e * hc2_over_e2 * skew_bracket(flux, delta_n, delta_n1)
    sigma_perp = transverse_from_corrections(k, flux, delta_n, delta_n1, quadrature_steps)
    rho_q = n_v * k / (2.0 * math.pi * n_e) * hc2_over_e2 * sigma_perp
    return HallResult(rho, rho_q, n_v, n_e, hc2_over_e2)


def hall_resistivity(n_v: float, n_e: float, flux: FluxDecomposition, energy: float,
                     spec: ExtensionSpec, kinematics: Kinematics | None = None,
                     hc2_over_e2: float = 1.0, quadrature_steps: int = 2 ** 14) -> HallResult:
    """rho_xy = (4 n_v/n_e)(hc^2/e^2) sin(pi alpha)[sin D_n cos(D_n - pi alpha)
    + sin D_n1 cos(D_n1 + pi alpha)].

    ``rho_xy_quadrature`` is the same quantity obtained as
    (n_v k / 2 pi n_e)(hc^2/e^2) times the numerically integrated transverse
    cross section.
    """
    energy = check_energy(energy)
    kin = kinematics or Kinematics.natural(energy)
    dn, dn1 = corrections(flux, energy, spec)
    return hall_from_corrections(n_v, n_e, flux, dn, dn1, wavenumber(kin),
                                 hc2_over_e2, quadrature_steps)


SpecRule = Union[ExtensionSpec, Callable[[FluxDecomposition], ExtensionSpec]]


def _threads():
    try:
        value = int(os.environ.get("AB_VORTEX_THREADS", "1"))
    except ValueError:
        raise InvalidInputError("AB_VORTEX_THREADS must be a positive integer") from None
    if value < 1:
        raise InvalidInputError("AB_VORTEX_THREADS must be a positive integer")
    return value


def hall_sweep(n_v: float, n_e: float, flux_range: Iterable[float], energy: float,
               spec_rule: SpecRule, quadrature_steps: int = 2 ** 12):
    """[(alpha, HallResult)] over ``flux_range``.

    ``spec_rule`` is either a fixed :class:`ExtensionSpec` (energies stay
    attached to channels -n, -n-1 of each alpha) or a callable mapping the
    decomposition to a spec.
    """
    alphas = [float(a) for a in flux_range]
    if not alphas:
        raise InvalidInputError("flux_range is empty")
    rule = spec_rule if callable(spec_rule) else (lambda flux: spec_rule)

    def one(alpha):
        flux = decompose_flux(alpha)
        spec = validate_extension(rule(flux), flux)
        return alpha, hall_resistivity(n_v, n_e, flux, energy, spec,
                                       quadrature_steps=quadrature_steps)

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        return list(pool.map(one, alphas))
