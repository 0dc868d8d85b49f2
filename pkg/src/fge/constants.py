"""Physical constants in SI units.

Every computation in the package happens in SI; reduced variables are
formed explicitly where needed instead of by switching unit systems.
"""

from dataclasses import dataclass

# =============================================================================
# CODATA 2018
# =============================================================================

HBAR = 1.054571817e-34            # reduced Planck constant [J s]
ELECTRON_MASS = 9.1093837015e-31  # electron rest mass [kg]
LIGHT_SPEED = 299792458.0         # speed of light in vacuum [m/s], exact
BOLTZMANN = 1.380649e-23          # Boltzmann constant [J/K], exact
HYDROGEN_MASS = 1.6735328e-27     # H-1 atomic mass [kg]
ELEMENTARY_CHARGE = 1.602176634e-19     # elementary charge [C], exact
VACUUM_PERMITTIVITY = 8.8541878128e-12  # electric constant [F/m]

# =============================================================================
# Astronomical reference values
# =============================================================================

SOLAR_MASS = 1.98892e30           # [kg]
SOLAR_RADIUS = 6.957e8            # IAU nominal solar radius [m]


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable bundle of every constant the package consumes."""

    hbar: float = HBAR
    electron_mass: float = ELECTRON_MASS
    light_speed: float = LIGHT_SPEED
    boltzmann: float = BOLTZMANN
    hydrogen_mass: float = HYDROGEN_MASS
    elementary_charge: float = ELEMENTARY_CHARGE
    vacuum_permittivity: float = VACUUM_PERMITTIVITY
    solar_mass: float = SOLAR_MASS
    solar_radius: float = SOLAR_RADIUS


_CONSTANTS = PhysicalConstants()


def constants() -> PhysicalConstants:
    """Return the package-wide constant set (always the same object)."""
    return _CONSTANTS
