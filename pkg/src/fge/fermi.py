"""Fermi-gas bookkeeping for a uniform electron gas.

Dispersion relations, Fermi momentum/energy/temperature, degeneracy
pressure, chemical potential, and the conversions among density,
pressure, and the pair-correlation distance, for both dispersion
regimes.  Public quantities are SI.

The thermal routines also exist in reduced form (u = k/k_F, t = T/T_F,
mu_tilde = mu/eps_F) because every dimensional state with the same
reduced coordinates shares one dimensionless solve; the reduced helpers
are the backbone of the exchange-amplitude module.
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .constants import constants
from .errors import DomainError, SolverError
from .quadrature import integrate_refined

THREE_PI_SQ = 3.0 * math.pi ** 2

# edge-cluster multipliers for panel seeds around the thermal occupancy edge
_EDGE_CLUSTER = (30.0, 15.0, 8.0, 4.0, 2.0, 1.0)
# e-foldings of occupancy decay kept before the integration range is truncated
_THERMAL_DECADES = 45.0
# below this reduced temperature the normalization correction to mu is < 1 ulp
_MU_SHIFT_FLOOR = 1e-9


class GasRegime(Enum):
    """Dispersion branch of the electron gas."""

    NONRELATIVISTIC = "nonrel"
    EXTREME_RELATIVISTIC = "rel"


class MuMode(Enum):
    """Chemical-potential policy at finite temperature.

    FERMI_ENERGY_APPROX pins mu to the Fermi energy; EXACT_NORMALIZATION
    solves the particle-number equation for mu at each temperature.
    """

    FERMI_ENERGY_APPROX = "fermi"
    EXACT_NORMALIZATION = "exact"


def _require_positive(name: str, value) -> None:
    if not (value > 0):
        raise DomainError(f"{name} must be positive, got {value!r}")


def _require_nonnegative(name: str, value) -> None:
    if not (value >= 0):
        raise DomainError(f"{name} must be nonnegative, got {value!r}")


# === conversions among density, momentum, pressure, distance ===


def fermi_momentum_from_density(density: float) -> float:
    """Fermi wavevector (1/m) of a gas with the given electron density (1/m^3)."""
    _require_positive("density", density)
    return (THREE_PI_SQ * density) ** (1.0 / 3.0)


def density_from_fermi_momentum(fermi_momentum: float) -> float:
    """Electron density (1/m^3) whose filled Fermi sphere has the given radius (1/m)."""
    _require_positive("fermi momentum", fermi_momentum)
    return fermi_momentum ** 3 / THREE_PI_SQ


def fermi_energy(fermi_momentum: float, regime: GasRegime) -> float:
    """Energy (J) of the highest occupied single-particle state."""
    _require_positive("fermi momentum", fermi_momentum)
    c = constants()
    if regime is GasRegime.NONRELATIVISTIC:
        return (c.hbar * fermi_momentum) ** 2 / (2.0 * c.electron_mass)
    return c.hbar * c.light_speed * fermi_momentum


def fermi_temperature(fermi_momentum: float, regime: GasRegime) -> float:
    """Degeneracy temperature scale (K) for the given Fermi wavevector."""
    return fermi_energy(fermi_momentum, regime) / constants().boltzmann


def pressure_from_density(density: float, regime: GasRegime) -> float:
    """Degeneracy pressure (Pa) of the ground-state gas at the given density."""
    _require_positive("density", density)
    c = constants()
    if regime is GasRegime.NONRELATIVISTIC:
        return THREE_PI_SQ ** (2.0 / 3.0) * c.hbar ** 2 * density ** (5.0 / 3.0) / (5.0 * c.electron_mass)
    return THREE_PI_SQ ** (1.0 / 3.0) * c.hbar * c.light_speed * density ** (4.0 / 3.0) / 4.0


def fermi_momentum_from_pressure(pressure: float, regime: GasRegime) -> float:
    """Fermi wavevector (1/m) of the gas exerting the given degeneracy pressure (Pa)."""
    _require_positive("pressure", pressure)
    c = constants()
    if regime is GasRegime.NONRELATIVISTIC:
        return (15.0 * math.pi ** 2 * c.electron_mass * pressure / c.hbar ** 2) ** 0.2
    return (12.0 * math.pi ** 2 * pressure / (c.hbar * c.light_speed)) ** 0.25


def density_from_pressure(pressure: float, regime: GasRegime) -> float:
    """Electron density (1/m^3) at the given degeneracy pressure (Pa)."""
    return density_from_fermi_momentum(fermi_momentum_from_pressure(pressure, regime))


def pressure_from_fermi_momentum(fermi_momentum: float, regime: GasRegime) -> float:
    """Degeneracy pressure (Pa) at the given Fermi wavevector (1/m)."""
    _require_positive("fermi momentum", fermi_momentum)
    c = constants()
    if regime is GasRegime.NONRELATIVISTIC:
        return c.hbar ** 2 * fermi_momentum ** 5 / (15.0 * math.pi ** 2 * c.electron_mass)
    return c.hbar * c.light_speed * fermi_momentum ** 4 / (12.0 * math.pi ** 2)


def entanglement_distance(fermi_momentum: float, zeta: float) -> float:
    """Largest pair separation (m) still classified entangled, zeta/k_F."""
    _require_positive("fermi momentum", fermi_momentum)
    _require_positive("zeta", zeta)
    return zeta / fermi_momentum


def pressure_from_entanglement_distance(distance: float, regime: GasRegime, zeta: float) -> float:
    """Degeneracy pressure (Pa) of the gas whose entanglement distance equals ``distance``."""
    _require_positive("entanglement distance", distance)
    _require_positive("zeta", zeta)
    return pressure_from_fermi_momentum(zeta / distance, regime)


# === dispersion and occupation ===


def dispersion(wavevector, regime: GasRegime):
    """Single-particle energy (J) at the given wavevector (scalar or array, 1/m)."""
    k = np.asarray(wavevector, dtype=float)
    if np.any(k < 0):
        raise DomainError(f"wavevector must be nonnegative, got {wavevector!r}")
    c = constants()
    if regime is GasRegime.NONRELATIVISTIC:
        out = (c.hbar * k) ** 2 / (2.0 * c.electron_mass)
    else:
        out = c.hbar * c.light_speed * k
    return float(out) if out.ndim == 0 else out


def _stable_fermi_factor(argument: np.ndarray) -> np.ndarray:
    # 1/(exp(a)+1) without overflow: exponentiate only negative arguments
    decay = np.exp(-np.abs(argument))
    return np.where(argument > 0, decay / (1.0 + decay), 1.0 / (1.0 + decay))


def occupation(wavevector, chemical_potential: float, temperature: float, regime: GasRegime):
    """Thermal occupancy of the state at ``wavevector`` (scalar or array).

    Zero temperature is an exact analytic branch: 1 below the chemical
    potential, 1/2 on it, 0 above.  The finite-temperature branch is
    overflow-safe for arbitrarily large reduced arguments.
    """
    _require_nonnegative("temperature", temperature)
    energy = np.asarray(dispersion(wavevector, regime), dtype=float)
    if temperature == 0.0:
        out = np.where(energy < chemical_potential, 1.0, np.where(energy == chemical_potential, 0.5, 0.0))
    else:
        scale = constants().boltzmann * temperature
        out = _stable_fermi_factor((energy - chemical_potential) / scale)
    return float(out) if out.ndim == 0 else out


def reduced_dispersion(u, regime: GasRegime):
    """Dimensionless dispersion d(u) with u = k/k_F: u^2 nonrelativistic, u relativistic."""
    u = np.asarray(u, dtype=float)
    return u * u if regime is GasRegime.NONRELATIVISTIC else u


def reduced_occupancy(u, mu_tilde: float, t: float, regime: GasRegime):
    """Occupancy in reduced variables, n(u) = 1/(exp((d(u) - mu_tilde)/t) + 1)."""
    d = reduced_dispersion(u, regime)
    if t == 0.0:
        return np.where(d < mu_tilde, 1.0, np.where(d == mu_tilde, 0.5, 0.0))
    return _stable_fermi_factor((d - mu_tilde) / t)


def occupancy_cutoff(mu_tilde: float, t: float, regime: GasRegime) -> float:
    """Reduced wavevector beyond which the occupancy has decayed below ~3e-20."""
    d_max = max(max(mu_tilde, 0.0) + _THERMAL_DECADES * t, 1e-12)
    if regime is GasRegime.NONRELATIVISTIC:
        return math.sqrt(d_max)
    return d_max


def occupancy_edge_points(mu_tilde: float, t: float, regime: GasRegime) -> list:
    """Quadrature breakpoints clustered around the thermal edge of the occupancy."""
    if t <= 0.0 or mu_tilde <= 0.0:
        return []
    if regime is GasRegime.NONRELATIVISTIC:
        u_edge = math.sqrt(mu_tilde)
        width = t / (2.0 * u_edge)
    else:
        u_edge = mu_tilde
        width = t
    points = [u_edge]
    for m in _EDGE_CLUSTER:
        points.append(u_edge - m * width)
        points.append(u_edge + m * width)
    return points


# === chemical potential ===


def _normalization_integral(mu_tilde: float, t: float, regime: GasRegime) -> float:
    """Reduced particle-number integral, int_0^inf u^2 n(u) du; equals 1/3 on shell."""
    u_max = occupancy_cutoff(mu_tilde, t, regime)
    edges = set(np.linspace(0.0, u_max, 9).tolist())
    edges.update(p for p in occupancy_edge_points(mu_tilde, t, regime) if 0.0 < p < u_max)

    def integrand(u):
        return u * u * reduced_occupancy(u, mu_tilde, t, regime)

    # tol_rel keeps far-off-shell probes (integral >> 1/3 at large t) from
    # demanding sub-rounding accuracy; on shell the absolute term dominates.
    value, _ = integrate_refined(
        integrand, sorted(edges), tol_abs=5e-15, tol_rel=5e-15, max_panels=2000, order_hi=32, order_lo=16
    )
    return value


@lru_cache(maxsize=None)
def reduced_chemical_potential(t: float, regime: GasRegime, mode: MuMode = MuMode.EXACT_NORMALIZATION) -> float:
    """Chemical potential over Fermi energy at reduced temperature ``t``.

    EXACT_NORMALIZATION solves the particle-number equation
    int u^2 n(u) du = 1/3 by bisection on the bracket [-50 t, 2]; the
    bracket is refined to the last representable midpoint, well past the
    1e-10 relative tolerance this function promises.  The deep refinement
    keeps mu reproducible to ~1e-14 across last-ulp changes in ``t``,
    which downstream scaling-invariance guarantees rely on.
    """
    if not (t >= 0.0):
        raise DomainError(f"reduced temperature must be nonnegative, got {t!r}")
    if mode is MuMode.FERMI_ENERGY_APPROX or t < _MU_SHIFT_FLOOR:
        return 1.0
    lo, hi = -50.0 * t, 2.0
    target = 1.0 / 3.0
    residual_lo = _normalization_integral(lo, t, regime) - target
    residual_hi = _normalization_integral(hi, t, regime) - target
    if residual_lo > 0.0 or residual_hi < 0.0:
        raise SolverError(
            "particle-number equation has no sign change on the bracket "
            f"[{lo:.6g}, {hi:.6g}]: endpoint residuals {residual_lo:.3e} and "
            f"{residual_hi:.3e} at reduced temperature {t!r}"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _normalization_integral(mid, t, regime) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def chemical_potential(density: float, temperature: float, regime: GasRegime,
                       mode: MuMode = MuMode.EXACT_NORMALIZATION) -> float:
    """Chemical potential (J) of the gas at the given density and temperature."""
    _require_positive("density", density)
    _require_nonnegative("temperature", temperature)
    k_f = fermi_momentum_from_density(density)
    eps_f = fermi_energy(k_f, regime)
    if temperature == 0.0:
        return eps_f
    t = temperature / fermi_temperature(k_f, regime)
    return eps_f * reduced_chemical_potential(t, regime, mode)


# === gas state and validity ===


@dataclass(frozen=True)
class FermiGasState:
    """Uniform electron gas with its derived scales, all SI."""

    density: float
    temperature: float
    regime: GasRegime
    mu_mode: MuMode
    fermi_momentum: float
    fermi_energy: float
    fermi_temperature: float
    chemical_potential: float
    pressure: float
    degeneracy_ok: bool

    @classmethod
    def from_density(cls, density: float, temperature: float, regime: GasRegime,
                     mu_mode: MuMode = MuMode.EXACT_NORMALIZATION) -> "FermiGasState":
        _require_positive("density", density)
        _require_nonnegative("temperature", temperature)
        k_f = fermi_momentum_from_density(density)
        t_f = fermi_temperature(k_f, regime)
        return cls(
            density=float(density),
            temperature=float(temperature),
            regime=regime,
            mu_mode=mu_mode,
            fermi_momentum=k_f,
            fermi_energy=fermi_energy(k_f, regime),
            fermi_temperature=t_f,
            chemical_potential=chemical_potential(density, temperature, regime, mu_mode),
            pressure=pressure_from_density(density, regime),
            degeneracy_ok=bool(temperature <= 0.01 * t_f),
        )


@dataclass(frozen=True)
class ValidityReport:
    """Advisory flags plus the raw ratios they were derived from."""

    degenerate: bool
    ideal: bool
    t_over_tf: float
    density_ratio: float


def ideality_threshold_density(protons: float) -> float:
    """Density scale (1/m^3) above which Coulomb coupling is negligible.

    (q^2 m / (4 pi eps0 hbar^2))^3 Z^2 in SI, i.e. Z^2 per cubic Bohr radius.
    """
    if not (protons >= 1):
        raise DomainError(f"proton number must be at least 1, got {protons!r}")
    c = constants()
    coulomb = c.elementary_charge ** 2 / (4.0 * math.pi * c.vacuum_permittivity)
    return (coulomb * c.electron_mass / c.hbar ** 2) ** 3 * protons ** 2


def _validity_from_ratios(temperature: float, fermi_temp: float, density: float, protons: float) -> ValidityReport:
    t_over_tf = temperature / fermi_temp
    density_ratio = density / ideality_threshold_density(protons)
    return ValidityReport(
        degenerate=bool(t_over_tf <= 0.01),
        ideal=bool(density_ratio >= 100.0),
        t_over_tf=t_over_tf,
        density_ratio=density_ratio,
    )


def validity(state: FermiGasState, protons: float) -> ValidityReport:
    """Degeneracy and ideality checks for a gas state with nuclear charge ``protons``.

    Flags are advisory (degenerate iff T/T_F <= 0.01, ideal iff the
    density exceeds 100x the Coulomb threshold); the raw ratios are
    always reported so callers can apply their own cutoffs.
    """
    return _validity_from_ratios(state.temperature, state.fermi_temperature, state.density, protons)
