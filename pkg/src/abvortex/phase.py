"""Partial-wave phase shifts of the flux tube with a rotationally invariant extension.

Conventional shift ``delta0_l = pi/2 (|l| - |l + alpha|)``.  The channels
l = -n and l = -n-1 pick up a correction ``Delta_l`` controlled by the
bound-state energy in that channel::

    Delta_l = angle(cos(p pi) - 1/A_l, sin(p pi)),   A_l = (E / |E_l|)**p

with ``p = eta`` for l = -n and ``p = 1 - eta`` for l = -n-1.  The angle is
the two-argument arctangent in (-pi, pi]; it is continuous through the
resonance where the denominator vanishes.  Only ``Delta mod pi`` enters
observables.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidInputError, NoRootError, WrongChannelError
from .flux import ExtensionSpec, FluxDecomposition, check_energy, decompose_flux
from .roots import bisect_secant


def standard_phase_shift(l: int, alpha: float) -> float:
    flux = decompose_flux(alpha)
    return 0.5 * math.pi * (abs(l) - flux.shifted_abs(l))


def channel_exponent(l: int, flux: FluxDecomposition) -> float:
    """|l + alpha| for a modified channel: eta for l=-n, 1-eta for l=-n-1."""
    if l not in flux.modified_channels:
        raise WrongChannelError(
            f"channel l={l} is not one of the modified channels {flux.modified_channels}")
    return flux.shifted_abs(l)


def _inverse_factor(l, flux, energy, spec):
    """1/A_l = (|E_l| / E)**p, or None when the channel is conventional."""
    e_bound = spec.bound_energy(l, flux)
    if e_bound is None:
        return None
    return (e_bound / energy) ** channel_exponent(l, flux)


def bound_state_factor(l: int, flux: FluxDecomposition, energy: float,
                       spec: ExtensionSpec) -> Optional[float]:
    """A_l = (E/|E_l|)**p for the modified channel ``l``; None if no bound state."""
    energy = check_energy(energy)
    e_bound = spec.bound_energy(l, flux)
    if e_bound is None:
        return None
    return (energy / e_bound) ** channel_exponent(l, flux)


def correction_angle(p: float, inverse_factor: float) -> float:
    """Delta for channel exponent ``p`` and ``1/A``."""
    return math.atan2(math.sin(p * math.pi), math.cos(p * math.pi) - inverse_factor)


def delta_correction(l: int, flux: FluxDecomposition, energy: float,
                     spec: ExtensionSpec) -> float:
    energy = check_energy(energy)
    if flux.eta == 0.0 or spec.forced_conventional or l not in flux.modified_channels:
        return 0.0
    inv = _inverse_factor(l, flux, energy, spec)
    if inv is None:
        return 0.0
    return correction_angle(channel_exponent(l, flux), inv)


def corrections(flux: FluxDecomposition, energy: float,
                spec: ExtensionSpec) -> tuple[float, float]:
    """(Delta_{-n}, Delta_{-n-1})."""
    return (delta_correction(-flux.n, flux, energy, spec),
            delta_correction(-flux.n - 1, flux, energy, spec))


@dataclass(frozen=True)
class ChannelPhase:
    l: int
    delta0: float
    correction: float
    total: float = field(init=False)
    s_element: complex = field(init=False)

    def __post_init__(self):
        total = self.delta0 + self.correction
        object.__setattr__(self, "total", total)
        object.__setattr__(self, "s_element", cmath.exp(2j * total))


def total_phase_shift(l: int, flux: FluxDecomposition, energy: float,
                      spec: ExtensionSpec) -> ChannelPhase:
    delta0 = 0.5 * math.pi * (abs(l) - flux.shifted_abs(l))
    return ChannelPhase(l, delta0, delta_correction(l, flux, energy, spec))


# -- resonances -------------------------------------------------------------

def resonance_denominator(l: int, flux: FluxDecomposition, energy: float,
                          spec: ExtensionSpec) -> float:
    """cos(p pi) - 1/A_l; its zero is where Delta_l = pi/2."""
    inv = _inverse_factor(l, flux, check_energy(energy), spec)
    if inv is None:
        raise InvalidInputError(f"channel l={l} has no bound state")
    return math.cos(channel_exponent(l, flux) * math.pi) - inv


@dataclass(frozen=True)
class Resonance:
    """Closed-form resonance energy; ``energy`` is None outside 0 < eta < 1/2."""

    energy: Optional[float]
    channel: int
    reason: str = ""

    def __bool__(self):
        return self.energy is not None


def resonance_energy(flux: FluxDecomposition, spec: ExtensionSpec) -> Resonance:
    """E_res = |E_{-n}| / cos(eta pi)**(1/eta), valid for 0 < eta < 1/2.

    Outside that region (or without a bound state in l = -n) the result
    carries ``energy=None`` and a reason; use :func:`find_resonance_numeric`
    for the l = -n-1 resonance at 1/2 < eta < 1.
    """
    channel = -flux.n
    if not 0.0 < flux.eta < 0.5:
        return Resonance(None, channel, f"closed form needs 0 < eta < 1/2, eta={flux.eta}")
    if spec.e_bound_n is None or spec.forced_conventional:
        return Resonance(None, channel, "no bound state in channel l=-n")
    eta = flux.eta
    return Resonance(spec.e_bound_n * math.cos(eta * math.pi) ** (-1.0 / eta), channel)


def find_resonance_numeric(flux: FluxDecomposition, spec: ExtensionSpec, channel: int,
                           bracket: tuple[float, float], xtol: float = 1e-12) -> float:
    """Energy in ``bracket`` where Delta_channel crosses pi/2."""
    lo, hi = (check_energy(e) for e in bracket)
    if lo > hi:
        lo, hi = hi, lo
    channel_exponent(channel, flux)
    if spec.bound_energy(channel, flux) is None:
        raise NoRootError(f"channel l={channel} has no bound state")
    return bisect_secant(lambda e: resonance_denominator(channel, flux, e, spec),
                         lo, hi, xtol=xtol)


def resonance_bracket(flux: FluxDecomposition, spec: ExtensionSpec, channel: int,
                      max_doublings: int = 2000) -> tuple[float, float]:
    """A sign-changing bracket for the resonance in ``channel``, found by doubling.

    Starts at E = |E_l| where the denominator is cos(p pi) - 1 < 0.
    """
    if channel_exponent(channel, flux) >= 0.5:
        raise NoRootError(f"no resonance in channel l={channel}: cos(p pi) <= 0")
    e_bound = spec.bound_energy(channel, flux)
    if e_bound is None:
        raise NoRootError(f"channel l={channel} has no bound state")
    lo = hi = e_bound
    for _ in range(max_doublings):
        if resonance_denominator(channel, flux, hi, spec) > 0.0:
            return lo, hi
        lo, hi = hi, 2.0 * hi
    raise NoRootError(f"no resonance below {hi:g}")
