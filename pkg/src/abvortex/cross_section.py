"""Differential cross sections for AB scattering with a modified boundary condition.

Two independent routes are kept side by side:

* :func:`modified_cross_section` evaluates the closed expansion

      dsigma/dphi = dsigma0/dphi + (8 pi/k) sum_l sin^2 Delta_l
                    + (4/k) sin(pi alpha)/sin(phi/2)
                      * [sin D_n cos(D_n - pi alpha + phi/2)
                         + sin D_n1 cos(D_n1 + pi alpha - phi/2)]

  term by term, exactly as written.
* :func:`amplitude_oracle` builds the scattering amplitude from the phase
  shifts alone, ``f = f_standard + (2 pi i k)**-1/2 sum_l e^{2i delta0_l}
  (e^{2i Delta_l} - 1) e^{i l phi}`` over the two modified channels, and
  squares it.

The two do not agree; ``abvortex.reconciliation`` measures by how much and
identifies the difference.  Angles are in radians, ``phi`` is the angle
between outgoing and incident direction, and all functions accept numpy
arrays for ``phi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import ForwardSingularityError, InvalidInputError
from .flux import ExtensionSpec, FluxDecomposition, check_energy, decompose_flux
from .phase import corrections, standard_phase_shift

DEFAULT_PHI_MIN = math.pi / 180
FORWARD_TOL = 1e-12


def _as_phi(phi):
    phi = np.asarray(phi, dtype=float)
    wrapped = np.remainder(phi + np.pi, 2.0 * np.pi) - np.pi
    if np.any(np.abs(wrapped) < FORWARD_TOL):
        raise ForwardSingularityError("cross section diverges in the forward direction phi = 0")
    return phi


def _out(x, like):
    return float(x) if np.ndim(like) == 0 else x


def _check_k(k):
    if not k > 0.0:
        raise InvalidInputError(f"wavenumber must be positive, got {k!r}")


def standard_cross_section(k: float, phi, alpha: float):
    """sin^2(pi alpha) / (2 pi k sin^2(phi/2)): conventional AB scattering."""
    _check_k(k)
    phi_arr = _as_phi(phi)
    s = decompose_flux(alpha).sin_pi_alpha()
    return _out(s * s / (2.0 * np.pi * k * np.sin(0.5 * phi_arr) ** 2), phi)


def _interference_bracket(flux, phi, dn, dn1):
    # sin(pi alpha) cos(x - pi alpha) == sin(pi eta) cos(x - pi eta): the sign
    # (-1)**n cancels, so use eta for exact periodicity in alpha
    pe = np.pi * flux.eta
    return math.sin(pe) * (np.sin(dn) * np.cos(dn - pe + 0.5 * phi)
                           + np.sin(dn1) * np.cos(dn1 + pe - 0.5 * phi))


def cross_section_from_corrections(k: float, phi, flux: FluxDecomposition,
                                   delta_n: float, delta_n1: float):
    """The closed expansion for given corrections (Delta_{-n}, Delta_{-n-1})."""
    _check_k(k)
    phi_arr = _as_phi(phi)
    s = flux.sin_pi_alpha()
    half = np.sin(0.5 * phi_arr)
    value = (s * s / (2.0 * np.pi * k * half ** 2)
             + 8.0 * np.pi / k * (math.sin(delta_n) ** 2 + math.sin(delta_n1) ** 2)
             + 4.0 / k * _interference_bracket(flux, phi_arr, delta_n, delta_n1) / half)
    return _out(value, phi)


def modified_cross_section(k: float, phi, flux: FluxDecomposition, energy: float,
                           spec: ExtensionSpec):
    dn, dn1 = corrections(flux, energy, spec)
    return cross_section_from_corrections(k, phi, flux, dn, dn1)


def asymmetry(k: float, phi, flux: FluxDecomposition, energy: float, spec: ExtensionSpec):
    """dsigma(phi) - dsigma(-phi) from the closed expansion."""
    phi_arr = _as_phi(phi)
    dn, dn1 = corrections(flux, energy, spec)
    value = (cross_section_from_corrections(k, phi_arr, flux, dn, dn1)
             - cross_section_from_corrections(k, -phi_arr, flux, dn, dn1))
    return _out(value, phi)


def skew_bracket(flux: FluxDecomposition, delta_n: float, delta_n1: float) -> float:
    """sin(pi alpha) [sin D_n cos(D_n - pi alpha) + sin D_n1 cos(D_n1 + pi alpha)]."""
    return float(_interference_bracket(flux, 0.0, delta_n, delta_n1))


# -- amplitude oracle ---------------------------------------------------------

@dataclass(frozen=True)
class AmplitudeSample:
    phi: np.ndarray | float
    f_standard: np.ndarray | complex
    f_correction: np.ndarray | complex

    @property
    def f(self):
        return self.f_standard + self.f_correction

    @property
    def cross_section(self):
        return np.abs(self.f) ** 2


def standard_amplitude(k: float, phi, flux: FluxDecomposition):
    """Conventional AB amplitude (2 pi i k)^(-1/2) sin(pi alpha) e^{-i(n+1/2)phi} / sin(phi/2).

    Equal to the Abel-regularised partial-wave sum over all l for phi != 0.
    """
    phi = _as_phi(phi)
    return (_prefactor(k) * flux.sin_pi_alpha()
            * np.exp(-1j * (flux.n + 0.5) * phi) / np.sin(0.5 * phi))


def _prefactor(k):
    _check_k(k)
    return (2j * np.pi * k) ** -0.5


def correction_amplitude(k: float, phi, flux: FluxDecomposition,
                         delta_n: float, delta_n1: float):
    """Two-term partial-wave sum over l = -n, -n-1 of e^{2i d0}(e^{2i D} - 1) e^{i l phi}."""
    phi = np.asarray(phi, dtype=float)
    total = np.zeros(np.shape(phi), dtype=complex)
    for l, delta in ((-flux.n, delta_n), (-flux.n - 1, delta_n1)):
        d0 = standard_phase_shift(l, flux.alpha)
        total = total + np.exp(2j * d0) * (np.exp(2j * delta) - 1.0) * np.exp(1j * l * phi)
    return _prefactor(k) * total


def amplitude_from_corrections(k, phi, flux, delta_n, delta_n1) -> AmplitudeSample:
    f_std = standard_amplitude(k, phi, flux)
    f_corr = correction_amplitude(k, phi, flux, delta_n, delta_n1)
    if np.ndim(phi) == 0:
        return AmplitudeSample(float(phi), complex(f_std), complex(f_corr))
    return AmplitudeSample(np.asarray(phi, dtype=float), f_std, f_corr)


def amplitude_oracle(k: float, phi, flux: FluxDecomposition, energy: float,
                     spec: ExtensionSpec) -> AmplitudeSample:
    dn, dn1 = corrections(flux, energy, spec)
    return amplitude_from_corrections(k, phi, flux, dn, dn1)


def oracle_cross_section(k, phi, flux, energy, spec):
    return _out(amplitude_oracle(k, phi, flux, energy, spec).cross_section, phi)


# -- angular profiles -----------------------------------------------------------

def phi_grid(phi_min: float = DEFAULT_PHI_MIN, phi_max: float = math.pi,
             steps: int = 720) -> np.ndarray:
    """Symmetric grid on [-phi_max, -phi_min] U [phi_min, phi_max], ``steps`` points."""
    if not 0.0 < phi_min < phi_max <= math.pi:
        raise InvalidInputError("need 0 < phi_min < phi_max <= pi")
    if steps < 2:
        raise InvalidInputError("need at least 2 grid points")
    n_neg = steps // 2
    pos = np.linspace(phi_min, phi_max, steps - n_neg)
    neg = -np.linspace(phi_min, phi_max, n_neg)[::-1]
    return np.concatenate([neg, pos])


@dataclass(frozen=True)
class AngularProfile:
    phi_grid: np.ndarray
    dsigma_total: np.ndarray
    dsigma_standard: np.ndarray
    k: float
    flux: FluxDecomposition
    spec: ExtensionSpec
    energy: float

    @property
    def negative_points(self) -> np.ndarray:
        """Grid angles where the closed expansion went negative (should be empty)."""
        return self.phi_grid[self.dsigma_total < 0.0]


def angular_profile(k, flux, energy, spec, grid=None) -> AngularProfile:
    grid = phi_grid() if grid is None else np.asarray(grid, dtype=float)
    return AngularProfile(grid,
                          modified_cross_section(k, grid, flux, energy, spec),
                          standard_cross_section(k, grid, flux.alpha),
                          k, flux, spec, energy)


# -- transverse cross section ---------------------------------------------------

def _transverse_grid(steps):
    if steps < 64:
        raise InvalidInputError("quadrature_steps must be >= 64")
    steps += steps % 2
    return np.linspace(-np.pi, np.pi, steps + 1)


def transverse_from_corrections(k, flux, delta_n, delta_n1, quadrature_steps=2 ** 14):
    """Simpson quadrature of sin(phi) dsigma/dphi over (-pi, pi).

    The standard term is even in phi and integrates to zero against sin(phi)
    (principal value); the remaining integrand is continuous once
    sin(phi)/sin(phi/2) is written as 2 cos(phi/2).
    """
    _check_k(k)
    phi = _transverse_grid(quadrature_steps)
    integrand = (np.sin(phi) * 8.0 * np.pi / k
                 * (math.sin(delta_n) ** 2 + math.sin(delta_n1) ** 2)
                 + 8.0 / k * np.cos(0.5 * phi) * _interference_bracket(flux, phi, delta_n, delta_n1))
    return float(simpson(integrand, x=phi))


def transverse_cross_section(k: float, flux: FluxDecomposition, energy: float,
                             spec: ExtensionSpec, quadrature_steps: int = 2 ** 14) -> float:
    dn, dn1 = corrections(flux, check_energy(energy), spec)
    return transverse_from_corrections(k, flux, dn, dn1, quadrature_steps)


def oracle_transverse_from_corrections(k, flux, delta_n, delta_n1, quadrature_steps=2 ** 14):
    """Same quadrature applied to |f|^2 from the amplitude oracle."""
    phi = _transverse_grid(quadrature_steps)
    # sin(phi) * f_standard with 1/sin(phi/2) cancelled
    sin_f_std = (_prefactor(k) * flux.sin_pi_alpha()
                 * np.exp(-1j * (flux.n + 0.5) * phi) * 2.0 * np.cos(0.5 * phi))
    f_corr = correction_amplitude(k, phi, flux, delta_n, delta_n1)
    integrand = (2.0 * np.real(np.conj(sin_f_std) * f_corr)
                 + np.sin(phi) * np.abs(f_corr) ** 2)
    return float(simpson(integrand, x=phi))
