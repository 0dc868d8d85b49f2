"""Exchange amplitude of the ideal Fermi gas and its root structure.

The amplitude f is the normalized pair-correlation overlap that drives
every entanglement quantity in this package.  At zero temperature it
has a closed form; at finite temperature it is an oscillatory
Fermi-Dirac integral evaluated in reduced variables (u = k/k_F,
x = k_F r, t = T/T_F) by adaptive panel quadrature.  The distance
constant zeta is the smallest x where f^2 crosses 1/2.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.polynomial import polyval
from scipy.optimize import brentq

from .errors import DomainError, SolverError
from .fermi import (
    GasRegime,
    MuMode,
    fermi_momentum_from_pressure,
    fermi_temperature,
    occupancy_cutoff,
    occupancy_edge_points,
    reduced_chemical_potential,
    reduced_occupancy,
)
from .quadrature import integrate_refined

# switch from the closed form 3(sin x - x cos x)/x^3 to its power series
# below this point; the closed form loses ~5 digits to cancellation near
# x ~ 1e-3, while the series at 0.25 is converged to ~1e-17
_SERIES_CROSSOVER = 0.25
# below this x the oscillatory factor is replaced by its x -> 0 limit
_X_SMALL = 1e-6
# k-th series coefficient of f(x,0) in powers of x^2
_SERIES_COEFFS = np.array(
    [(-1.0) ** k * 6.0 * (k + 1) / math.factorial(2 * k + 3) for k in range(9)]
)

_TOL_MIN, _TOL_MAX = 1e-14, 1e-6


def _validate_quad_tol(tol: float) -> None:
    if not (_TOL_MIN <= tol <= _TOL_MAX):
        raise DomainError(
            f"quadrature tolerance must lie in [{_TOL_MIN:g}, {_TOL_MAX:g}], got {tol!r}"
        )


@dataclass(frozen=True)
class ReducedCoordinates:
    """Dimensionless evaluation point: x = k_F r, t = T/T_F, mu_tilde = mu/eps_F."""

    x: float
    t: float
    mu_tilde: float
    regime: GasRegime

    def __post_init__(self):
        if not (self.x >= 0):
            raise DomainError(f"reduced separation must be nonnegative, got {self.x!r}")
        if not (self.t >= 0):
            raise DomainError(f"reduced temperature must be nonnegative, got {self.t!r}")
        if self.t == 0 and self.mu_tilde != 1.0:
            raise DomainError(
                "at zero reduced temperature the reduced chemical potential must be "
                f"exactly 1, got {self.mu_tilde!r}"
            )


@dataclass(frozen=True)
class ExchangeAmplitude:
    """Amplitude value together with where and how well it was computed."""

    value: float
    coords: ReducedCoordinates
    quadrature_error_estimate: float


@dataclass(frozen=True)
class ZetaResult:
    """Smallest reduced separation where f^2 crosses 1/2."""

    zeta: float
    t: float
    regime: GasRegime
    residual: float


def f_zero_temperature(x):
    """Ground-state exchange amplitude 3(sin x - x cos x)/x^3 (scalar or array).

    Small arguments use the alternating series 1 - x^2/10 + x^4/280 - ...
    so the value stays accurate to full precision through the crossover.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError(f"reduced separation must be nonnegative, got {x!r}")
    flat = np.atleast_1d(arr)
    out = np.empty_like(flat)
    small = flat < _SERIES_CROSSOVER
    if small.any():
        out[small] = polyval(flat[small] ** 2, _SERIES_COEFFS)
    if (~small).any():
        xb = flat[~small]
        out[~small] = 3.0 * (np.sin(xb) - xb * np.cos(xb)) / xb ** 3
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def f_finite_temperature(coords: ReducedCoordinates, tol: float = 1e-10) -> ExchangeAmplitude:
    """Thermal exchange amplitude (3/x) int_0^inf u n(u) sin(ux) du.

    Panel seeds sit on half-periods of the sine factor and in a graded
    cluster around the thermal occupancy edge; adaptive bisection then
    drives the high/low-order discrepancy below ``tol`` (absolute, with
    a relative criterion of the same size; the amplitude is O(1)).
    For x below 1e-6 the sine factor is replaced by its limit and the
    integral becomes 3 int u^2 n(u) du, which equals 1 exactly when
    mu_tilde comes from the particle-number equation.
    """
    _validate_quad_tol(tol)
    if not (coords.t > 0):
        raise DomainError(
            f"the thermal path needs a positive reduced temperature, got {coords.t!r}"
        )
    x, t, mu_tilde, regime = coords.x, coords.t, coords.mu_tilde, coords.regime
    u_max = occupancy_cutoff(mu_tilde, t, regime)
    edges = set(np.linspace(0.0, u_max, 9).tolist())
    edges.update(p for p in occupancy_edge_points(mu_tilde, t, regime) if 0.0 < p < u_max)

    if x < _X_SMALL:
        def integrand(u):
            return 3.0 * u * u * reduced_occupancy(u, mu_tilde, t, regime)
    else:
        step = max(math.pi / x, 1.0 / 64.0)
        edges.update(np.arange(step, u_max, step).tolist())

        def integrand(u):
            return (3.0 / x) * u * reduced_occupancy(u, mu_tilde, t, regime) * np.sin(u * x)

    value, err = integrate_refined(
        integrand, sorted(edges), tol_abs=tol, tol_rel=tol, max_panels=4000
    )
    return ExchangeAmplitude(value=value, coords=coords, quadrature_error_estimate=err)


def f_from_pressure(separation: float, pressure: float, temperature: float,
                    regime: GasRegime, mu_mode: MuMode = MuMode.EXACT_NORMALIZATION,
                    tol: float = 1e-10) -> ExchangeAmplitude:
    """Exchange amplitude of the gas at the given pressure, evaluated at a pair separation.

    The dimensional inputs collapse to ReducedCoordinates through the
    pressure -> Fermi momentum inversion; the amplitude depends on the
    inputs only through those reduced numbers.
    """
    if not (separation > 0):
        raise DomainError(f"separation must be positive, got {separation!r}")
    if not (pressure > 0):
        raise DomainError(f"pressure must be positive, got {pressure!r}")
    if not (temperature >= 0):
        raise DomainError(f"temperature must be nonnegative, got {temperature!r}")
    k_f = fermi_momentum_from_pressure(pressure, regime)
    x = k_f * separation
    if temperature == 0.0:
        coords = ReducedCoordinates(x=x, t=0.0, mu_tilde=1.0, regime=regime)
        return ExchangeAmplitude(value=f_zero_temperature(x), coords=coords,
                                 quadrature_error_estimate=0.0)
    t = temperature / fermi_temperature(k_f, regime)
    mu_tilde = reduced_chemical_potential(t, regime, mu_mode)
    coords = ReducedCoordinates(x=x, t=t, mu_tilde=mu_tilde, regime=regime)
    return f_finite_temperature(coords, tol)


_SCAN_GRID = np.concatenate(([1e-3], np.arange(0.1, 3.05, 0.1)))


@lru_cache(maxsize=None)
def solve_zeta(t: float, regime: GasRegime = GasRegime.NONRELATIVISTIC,
               mu_mode: MuMode = MuMode.EXACT_NORMALIZATION,
               tol: float = 1e-12) -> ZetaResult:
    """Smallest x > 0 with f(x,t)^2 = 1/2, bracketed by a scan and refined by Brent.

    The inner quadrature runs at min(tol, 1e-12) so the returned residual
    stays below the 1e-10 contract regardless of the caller's tolerance.
    """
    if not (t >= 0):
        raise DomainError(f"reduced temperature must be nonnegative, got {t!r}")
    quad_tol = min(max(tol, _TOL_MIN), 1e-12)

    if t == 0.0:
        def amplitude(xv):
            return f_zero_temperature(xv)
    else:
        mu_tilde = reduced_chemical_potential(t, regime, mu_mode)

        def amplitude(xv):
            coords = ReducedCoordinates(x=xv, t=t, mu_tilde=mu_tilde, regime=regime)
            return f_finite_temperature(coords, quad_tol).value

    f_origin = 1.0 if t == 0.0 else amplitude(0.0)
    if not (f_origin ** 2 > 0.5):
        raise SolverError(
            f"no root exists: the amplitude at zero separation is {f_origin!r}, "
            "which does not exceed 1/sqrt(2), so f^2 = 1/2 has no crossing"
        )

    def gap(xv):
        return amplitude(xv) ** 2 - 0.5

    bracket = None
    prev_x = float(_SCAN_GRID[0])
    prev_gap = gap(prev_x)
    for xk in _SCAN_GRID[1:]:
        xk = float(xk)
        if prev_gap == 0.0:
            bracket = (prev_x, prev_x)
            break
        gk = gap(xk)
        if prev_gap * gk < 0.0:
            bracket = (prev_x, xk)
            break
        prev_x, prev_gap = xk, gk
    if bracket is None:
        raise SolverError(
            f"no sign change of f^2 - 1/2 on [{_SCAN_GRID[0]:g}, {_SCAN_GRID[-1]:g}] "
            f"at t={t!r}: the crossing either sits below the scan window "
            "(bracket too small) or the amplitude never reaches 1/2"
        )

    if bracket[0] == bracket[1]:
        root = bracket[0]
    else:
        root = brentq(gap, bracket[0], bracket[1], xtol=1e-13,
                      rtol=4.0 * np.finfo(float).eps, maxiter=200)
    residual = abs(amplitude(root) ** 2 - 0.5)
    if not (residual < 1e-10):
        raise SolverError(
            f"root refinement stalled: residual {residual:.3e} at x={root!r}, t={t!r}"
        )
    return ZetaResult(zeta=float(root), t=float(t), regime=regime, residual=float(residual))
