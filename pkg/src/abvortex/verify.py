"""Self-checks behind ``abvortex verify``.

Each check returns a :class:`Check`; the limit checks compare against the
actual approach rate (E/|E_l|)**p of the correction, not a fixed number.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import reconciliation
from .cross_section import (cross_section_from_corrections, modified_cross_section,
                            phi_grid, standard_cross_section, transverse_cross_section)
from .flux import ExtensionSpec, decompose_flux
from .hall import hall_from_corrections, hall_resistivity
from .phase import (channel_exponent, corrections, find_resonance_numeric,
                    resonance_energy, total_phase_shift)


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.threshold)


def _mod_pi(x):
    return abs(math.remainder(x, math.pi))


def check_resonance():
    worst = 0.0
    for eta in (0.1, 0.2, 0.25, 1 / 3, 0.45):
        for e_n in (0.5, 1.0, 2.0):
            flux, spec = decompose_flux(eta), ExtensionSpec(e_n)
            closed = resonance_energy(flux, spec).energy
            numeric = find_resonance_numeric(flux, spec, 0, (e_n, 1e4 * e_n))
            worst = max(worst, abs(closed - numeric) / closed)
    return Check("resonance closed form vs bisection", worst, 1e-8)


def check_conventional_absent():
    grid = phi_grid()
    worst = 0.0
    for alpha in (0.25, 0.5, 1.75):
        flux = decompose_flux(alpha)
        std = standard_cross_section(1.0, grid, alpha)
        mod = modified_cross_section(1.0, grid, flux, 1.0, ExtensionSpec())
        worst = max(worst, float(np.max(np.abs(mod - std) / std)))
    return Check("no bound states reproduces standard cross section", worst, 1e-14)


def check_limit_rates():
    """Delta -> 0 (mod pi) as |E_l| -> inf and Delta -> p pi as |E_l| -> 0, at rate x**p."""
    worst = 0.0
    for alpha in (0.25, 0.5, 0.75):
        flux = decompose_flux(alpha)
        for l in flux.modified_channels:
            p = channel_exponent(l, flux)
            bound = 1.05 * math.sin(p * math.pi)
            large = ExtensionSpec(1e8, 1e8)
            dev = _mod_pi(corrections(flux, 1.0, large)[0 if l == -flux.n else 1])
            worst = max(worst, dev / (bound * 1e-8 ** p))
            ph = total_phase_shift(l, flux, 1.0, ExtensionSpec(1e-12, 1e-12))
            dev = abs(ph.s_element - cmath.exp(-2j * ph.delta0))
            worst = max(worst, dev / (2.0 * bound * 1e-12 ** p))
    return Check("conventional and flip limits approach at rate (E/|E_l|)^p", worst, 1.0)


POINTS = ((0.25, 1.0, None, 2.0), (0.6, 0.7, 1.5, 1.3), (0.9, 3.0, 0.2, 0.8))


def check_periodicity():
    grid = phi_grid()
    worst = 0.0
    for alpha, e_n, e_n1, energy in POINTS:
        spec = ExtensionSpec(e_n, e_n1)
        a, b = decompose_flux(alpha), decompose_flux(alpha + 1.0)
        k = math.sqrt(energy)
        x = modified_cross_section(k, grid, a, energy, spec)
        y = modified_cross_section(k, grid, b, energy, spec)
        worst = max(worst, float(np.max(np.abs(x - y) / np.abs(x))))
        ra = hall_resistivity(1.0, 1.0, a, energy, spec, quadrature_steps=64).rho_xy
        rb = hall_resistivity(1.0, 1.0, b, energy, spec, quadrature_steps=64).rho_xy
        worst = max(worst, abs(ra - rb) / abs(ra))
    return Check("periodicity alpha -> alpha+1", worst, 1e-12)


def check_asymmetry():
    grid = phi_grid()
    pos = grid[grid > 0]
    flux = decompose_flux(0.3)
    sym = cross_section_from_corrections(1.0, pos, flux, 0.7, math.pi - 0.7)
    sym_m = cross_section_from_corrections(1.0, -pos, flux, 0.7, math.pi - 0.7)
    value = float(np.max(np.abs(sym - sym_m) / sym))
    generic = decompose_flux(0.25)
    spec = ExtensionSpec(1.0)
    asym = (modified_cross_section(math.sqrt(2.0), math.pi / 2, generic, 2.0, spec)
            - modified_cross_section(math.sqrt(2.0), -math.pi / 2, generic, 2.0, spec))
    return [Check("asymmetry vanishes when D_n + D_n1 = pi", value, 1e-10),
            Check("asymmetry nonzero at generic point (1/|asym|)", 1.0 / max(abs(asym), 1e-300), 1e6)]


def check_branch_invariance():
    grid = phi_grid()
    worst = 0.0
    for alpha, e_n, e_n1, energy in POINTS:
        flux = decompose_flux(alpha)
        dn, dn1 = corrections(flux, energy, ExtensionSpec(e_n, e_n1))
        base = cross_section_from_corrections(1.0, grid, flux, dn, dn1)
        rho = hall_from_corrections(1.0, 1.0, flux, dn, dn1, quadrature_steps=64).rho_xy
        for shift in ((math.pi, 0.0), (0.0, math.pi), (-math.pi, math.pi)):
            a, b = dn + shift[0], dn1 + shift[1]
            other = cross_section_from_corrections(1.0, grid, flux, a, b)
            worst = max(worst, float(np.max(np.abs(other - base) / np.abs(base))))
            r = hall_from_corrections(1.0, 1.0, flux, a, b, quadrature_steps=64).rho_xy
            worst = max(worst, abs(r - rho) / abs(rho))
    return Check("branch invariance Delta -> Delta + pi", worst, 1e-12)


def check_hall_identity():
    worst = 0.0
    for eta in np.linspace(0.1, 0.9, 5):
        flux = decompose_flux(float(eta))
        for energy in np.geomspace(0.1, 10.0, 5):
            res = hall_resistivity(0.01, 1.0, flux, float(energy), ExtensionSpec(1.0, 2.0),
                                   quadrature_steps=2 ** 10)
            worst = max(worst, abs(res.rho_xy - res.rho_xy_quadrature) / abs(res.rho_xy))
    return Check("Hall closed form vs transverse quadrature", worst, 1e-6)


def check_quadrature_convergence():
    flux = decompose_flux(0.25)
    spec = ExtensionSpec(1.0, 2.0)
    a = transverse_cross_section(math.sqrt(2.0), flux, 2.0, spec, 2 ** 14)
    b = transverse_cross_section(math.sqrt(2.0), flux, 2.0, spec, 2 ** 15)
    return Check("transverse quadrature step halving at 2^14", abs(a - b) / abs(b), 1e-8)


def check_reconciliation():
    reasons = reconciliation.stale_reasons()
    return Check("reconciliation report up to date" + (": " + "; ".join(reasons) if reasons else ""),
                 float(len(reasons)), 0.0)


def run_checks() -> list[Check]:
    checks = [check_resonance(), check_conventional_absent(), check_limit_rates(),
              check_periodicity()]
    checks += check_asymmetry()
    checks += [check_branch_invariance(), check_hall_identity(),
               check_quadrature_convergence(), check_reconciliation()]
    return checks
