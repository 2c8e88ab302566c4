"""Exception types raised by abvortex."""


class ABVortexError(ValueError):
    """Base class for all library errors."""


class InvalidInputError(ABVortexError):
    pass


class NonpositiveEnergyError(ABVortexError):
    pass


class InvalidExtensionError(ABVortexError):
    pass


class WrongChannelError(ABVortexError):
    """Raised when a channel outside l = -n, -n-1 is asked for extension data."""


class NoRootError(ABVortexError):
    pass


class ForwardSingularityError(ABVortexError):
    """The scattering angle is (numerically) zero, where the AB cross section diverges."""


class IntegerFluxWarning(UserWarning):
    """Bound energies were supplied at integer flux and are ignored."""
