"""Flux decomposition, kinematics and extension parameters.

Every quantity downstream depends on the flux only through the split
``alpha = n + eta`` with integer ``n`` and ``0 <= eta < 1``.  The two
angular-momentum channels that may carry a nonstandard boundary condition
are ``l = -n`` and ``l = -n - 1``.
"""
from __future__ import annotations

import dataclasses
import enum
import math
import warnings
from dataclasses import dataclass
from typing import Optional

from .errors import (
    IntegerFluxWarning,
    InvalidExtensionError,
    InvalidInputError,
    NonpositiveEnergyError,
    WrongChannelError,
)


@dataclass(frozen=True)
class FluxDecomposition:
    """Flux ``alpha`` (in units of hc/|e|) split as ``n + eta``."""

    alpha: float
    n: int
    eta: float

    @property
    def modified_channels(self) -> tuple[int, int]:
        return (-self.n, -self.n - 1)

    @property
    def parity(self) -> int:
        """(-1)**n, so that sin(pi*alpha) == parity * sin(pi*eta)."""
        return -1 if self.n % 2 else 1

    def shifted_abs(self, l: int) -> float:
        """|l + alpha|, with the integer part added exactly.

        Returns ``eta`` for l = -n and ``1 - eta`` for l = -n-1 bit for bit.
        """
        return abs((l + self.n) + self.eta)

    def sin_pi_alpha(self) -> float:
        return self.parity * math.sin(math.pi * self.eta)

    def shifted(self, m: int) -> "FluxDecomposition":
        """The decomposition of ``alpha + m`` for integer ``m`` (same eta)."""
        return FluxDecomposition(self.alpha + m, self.n + m, self.eta)


def decompose_flux(alpha: float) -> FluxDecomposition:
    """Split ``alpha`` into ``n = floor(alpha)`` and ``eta = alpha - n``.

    >>> decompose_flux(-0.75)
    FluxDecomposition(alpha=-0.75, n=-1, eta=0.25)
    """
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise InvalidInputError(f"flux must be finite, got {alpha!r}")
    n = math.floor(alpha)
    eta = alpha - n
    if eta >= 1.0:
        # tiny negative alpha: alpha - floor(alpha) rounds up to 1
        eta = math.nextafter(1.0, 0.0)
    return FluxDecomposition(alpha, int(n), eta)


@dataclass(frozen=True)
class ExtensionSpec:
    """Bound-state energy magnitudes for the channels l = -n and l = -n-1.

    ``None`` means the conventional (regular) boundary condition in that
    channel.  Energies share the unit of the scattering energy.
    """

    e_bound_n: Optional[float] = None
    e_bound_n1: Optional[float] = None
    forced_conventional: bool = False

    def __post_init__(self):
        for name in ("e_bound_n", "e_bound_n1"):
            value = getattr(self, name)
            if value is None:
                continue
            value = float(value)
            if not (math.isfinite(value) and value > 0.0):
                raise InvalidExtensionError(
                    f"{name} must be a positive finite energy, got {value!r}")
            object.__setattr__(self, name, value)

    def bound_energy(self, l: int, flux: FluxDecomposition) -> Optional[float]:
        if l == -flux.n:
            return self.e_bound_n
        if l == -flux.n - 1:
            return self.e_bound_n1
        raise WrongChannelError(
            f"channel l={l} is not one of the modified channels {flux.modified_channels}")

    def swapped(self) -> "ExtensionSpec":
        """Exchange the two channel energies (the relabelling under alpha -> -alpha)."""
        return ExtensionSpec(self.e_bound_n1, self.e_bound_n)

    @property
    def is_conventional(self) -> bool:
        return self.forced_conventional or (
            self.e_bound_n is None and self.e_bound_n1 is None)


CONVENTIONAL = ExtensionSpec()


def validate_extension(spec: ExtensionSpec, flux: FluxDecomposition) -> ExtensionSpec:
    """Check ``spec`` against ``flux``.

    At integer flux both channels are forced to the conventional boundary
    condition: the returned spec has ``forced_conventional=True`` and an
    :class:`IntegerFluxWarning` is emitted if bound energies were given.
    """
    for value in (spec.e_bound_n, spec.e_bound_n1):
        if value is not None and not value > 0.0:
            raise InvalidExtensionError(f"bound energy must be positive, got {value!r}")
    if flux.eta == 0.0:
        if spec.e_bound_n is not None or spec.e_bound_n1 is not None:
            warnings.warn(
                f"integer flux alpha={flux.alpha}: bound energies ignored",
                IntegerFluxWarning, stacklevel=2)
        return dataclasses.replace(spec, forced_conventional=True)
    return spec


class UnitSystem(str, enum.Enum):
    NATURAL = "natural"    # hbar = 2m = 1
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Kinematics:
    energy: float
    mass: float = 0.5
    hbar: float = 1.0
    unit_system: UnitSystem = UnitSystem.NATURAL

    def __post_init__(self):
        object.__setattr__(self, "unit_system", UnitSystem(self.unit_system))
        if self.unit_system is UnitSystem.NATURAL and (self.mass, self.hbar) != (0.5, 1.0):
            raise InvalidInputError("natural units fix mass=0.5, hbar=1")
        if not (self.mass > 0.0 and self.hbar > 0.0):
            raise InvalidInputError("mass and hbar must be positive")

    @classmethod
    def natural(cls, energy: float) -> "Kinematics":
        return cls(energy)

    @property
    def k(self) -> float:
        return wavenumber(self)


def wavenumber(kin: Kinematics) -> float:
    """k = sqrt(2 m E) / hbar."""
    if not kin.energy > 0.0:
        raise NonpositiveEnergyError(f"energy must be positive, got {kin.energy!r}")
    return math.sqrt(2.0 * kin.mass * kin.energy) / kin.hbar


def check_energy(energy: float) -> float:
    energy = float(energy)
    if not (energy > 0.0 and math.isfinite(energy)):
        raise NonpositiveEnergyError(f"energy must be positive and finite, got {energy!r}")
    return energy
