"""Aharonov-Bohm scattering off a flux tube with nonstandard boundary conditions."""

__version__ = "0.1.0"

from .errors import (ABVortexError, ForwardSingularityError, IntegerFluxWarning,
                     InvalidExtensionError, InvalidInputError, NoRootError,
                     NonpositiveEnergyError, WrongChannelError)
from .flux import (ExtensionSpec, FluxDecomposition, Kinematics, UnitSystem,
                   decompose_flux, validate_extension, wavenumber)
from .phase import (ChannelPhase, Resonance, bound_state_factor, corrections,
                    delta_correction, find_resonance_numeric, resonance_energy,
                    standard_phase_shift, total_phase_shift)
from .cross_section import (AmplitudeSample, AngularProfile, amplitude_oracle,
                            angular_profile, asymmetry, modified_cross_section,
                            phi_grid, standard_cross_section, transverse_cross_section)
from .hall import HallResult, hall_resistivity, hall_sweep
