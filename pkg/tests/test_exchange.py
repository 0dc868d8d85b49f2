"""Exchange amplitude: ground state, thermal quadrature, and the distance constant."""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import spherical_jn

import fge
from fge import (
    DomainError,
    GasRegime,
    MuMode,
    ReducedCoordinates,
    SolverError,
    constants,
    f_finite_temperature,
    f_from_pressure,
    f_zero_temperature,
    fermi_momentum_from_pressure,
    fermi_temperature,
    occupation,
    pressure_from_density,
    pressure_from_fermi_momentum,
    reduced_chemical_potential,
    solve_zeta,
)
from fge.fermi import chemical_potential, fermi_momentum_from_density

NR = GasRegime.NONRELATIVISTIC
ER = GasRegime.EXTREME_RELATIVISTIC

ZETA0 = 1.8148229770012292        # root of f^2 = 1/2 in the ground state
FIRST_ZERO = 4.493409457909064    # first positive root of the amplitude


# === ground state ===


def test_ground_state_limits():
    assert f_zero_temperature(0.0) == 1.0
    assert f_zero_temperature(ZETA0) == pytest.approx(math.sqrt(0.5), abs=1e-13)
    assert abs(f_zero_temperature(FIRST_ZERO)) < 1e-14


def test_ground_state_against_spherical_bessel():
    xs = np.linspace(1e-3, 50.0, 500)
    expected = 3.0 * spherical_jn(1, xs) / xs
    assert np.max(np.abs(f_zero_temperature(xs) - expected)) < 5e-14


def test_series_meets_closed_form_at_crossover():
    # both branches must agree through the seam at x = 0.25
    xs = 0.25 - np.array([1e-12, 1e-9, 1e-6, 1e-3, 0.01])
    series = f_zero_temperature(xs)
    closed = 3.0 * (np.sin(xs) - xs * np.cos(xs)) / xs ** 3
    assert np.max(np.abs(series - closed)) < 1e-13


def test_ground_state_strictly_decreasing_inside_window():
    xs = np.linspace(1e-3, ZETA0, 400)
    assert np.all(np.diff(f_zero_temperature(xs)) < 0)


def test_ground_state_below_threshold_outside_window():
    xs = np.linspace(ZETA0 + 1e-6, 50.0, 2000)
    assert np.all(np.abs(f_zero_temperature(xs)) < math.sqrt(0.5))


def test_ground_state_scalar_array_forms():
    assert isinstance(f_zero_temperature(1.0), float)
    out = f_zero_temperature(np.array([[0.1, 0.3], [1.0, 3.0]]))
    assert out.shape == (2, 2)
    with pytest.raises(DomainError, match="nonnegative"):
        f_zero_temperature(-0.1)


# === reduced coordinates ===


def test_coordinates_validation():
    with pytest.raises(DomainError, match="separation"):
        ReducedCoordinates(x=-1.0, t=0.1, mu_tilde=0.9, regime=NR)
    with pytest.raises(DomainError, match="temperature"):
        ReducedCoordinates(x=1.0, t=-0.1, mu_tilde=0.9, regime=NR)
    with pytest.raises(DomainError, match="exactly 1"):
        ReducedCoordinates(x=1.0, t=0.0, mu_tilde=0.9, regime=NR)


# === thermal amplitude ===


def test_thermal_amplitude_reference_values():
    mu_nr = reduced_chemical_potential(0.05, NR)
    got = f_finite_temperature(ReducedCoordinates(1.0, 0.05, mu_nr, NR))
    assert got.value == pytest.approx(0.90258084334657520, abs=5e-10)
    assert got.quadrature_error_estimate < 1e-9

    mu_cold = reduced_chemical_potential(0.01, NR)
    got = f_finite_temperature(ReducedCoordinates(1.8, 0.01, mu_cold, NR))
    assert got.value == pytest.approx(0.71122797707031327, abs=5e-10)

    mu_er = reduced_chemical_potential(0.05, ER)
    got = f_finite_temperature(ReducedCoordinates(1.0, 0.05, mu_er, ER))
    assert got.value == pytest.approx(0.89979756601208668, abs=5e-10)


def test_thermal_amplitude_normalized_at_origin():
    # exact normalization pins the zero-separation amplitude at 1
    for regime in (NR, ER):
        mu = reduced_chemical_potential(0.05, regime)
        got = f_finite_temperature(ReducedCoordinates(0.0, 0.05, mu, regime))
        assert got.value == pytest.approx(1.0, abs=1e-9)


def test_thermal_amplitude_small_x_branch_is_continuous():
    mu = reduced_chemical_potential(0.05, NR)
    below = f_finite_temperature(ReducedCoordinates(9e-7, 0.05, mu, NR)).value
    above = f_finite_temperature(ReducedCoordinates(1.1e-6, 0.05, mu, NR)).value
    assert abs(below - above) < 1e-8


def test_thermal_amplitude_approaches_ground_state():
    t = 1e-4
    mu = reduced_chemical_potential(t, NR)
    xs = np.linspace(0.05, 6.0, 25)
    worst = max(
        abs(f_finite_temperature(ReducedCoordinates(float(x), t, mu, NR)).value
            - f_zero_temperature(float(x)))
        for x in xs
    )
    assert worst < 1e-3


def test_fermi_level_approximation_lifts_the_origin():
    # with mu pinned at the Fermi energy the x=0 amplitude gains ~(pi t)^2/8
    t = 0.05
    got = f_finite_temperature(ReducedCoordinates(1e-8, t, 1.0, NR), tol=1e-12)
    assert got.value == pytest.approx(1.0 + (math.pi * t) ** 2 / 8.0, abs=1e-4)


def test_thermal_amplitude_stays_within_unit_bound():
    for t in (0.1, 0.3, 0.5):
        mu = reduced_chemical_potential(t, NR)
        for x in np.arange(0.0, 50.1, 2.5):
            value = f_finite_temperature(ReducedCoordinates(float(x), t, mu, NR)).value
            assert abs(value) <= 1.0 + 1e-9


def test_thermal_amplitude_tolerance_validation():
    mu = reduced_chemical_potential(0.05, NR)
    coords = ReducedCoordinates(1.0, 0.05, mu, NR)
    with pytest.raises(DomainError, match="tolerance"):
        f_finite_temperature(coords, tol=1e-15)
    with pytest.raises(DomainError, match="tolerance"):
        f_finite_temperature(coords, tol=1e-5)


# === dimensional entry point ===


def test_from_pressure_ground_state_matches_reduced_form():
    r, p = 1e-10, 1e9
    amp = f_from_pressure(r, p, 0.0, NR)
    x = fermi_momentum_from_pressure(p, NR) * r
    assert amp.value == pytest.approx(f_zero_temperature(x), rel=1e-14)
    assert amp.quadrature_error_estimate == 0.0
    assert amp.coords.x == pytest.approx(x, rel=1e-15)
    assert amp.coords.t == 0.0


def test_from_pressure_prefactor_identity():
    # the dimensional amplitude factors into gamma / (r P^a) times a pure
    # momentum integral; exercising it checks every constant in the chain
    c = constants()
    rng = np.random.default_rng(99)
    gamma_nr = (3.0 ** (5 / 3) * c.hbar ** 2 / (15 * math.pi ** 2 * c.electron_mass)) ** (3 / 5)
    gamma_er = (3.0 ** (4 / 3) * c.hbar * c.light_speed / (12 * math.pi ** 2)) ** (3 / 4)
    for _ in range(10):
        r = 10.0 ** rng.uniform(-11, -9)
        p = 10.0 ** rng.uniform(7, 11)
        for regime, gamma, power, budget in (
            (NR, gamma_nr, 3 / 5, 1e-12),
            (ER, gamma_er, 3 / 4, 1e-11),
        ):
            k_f = fermi_momentum_from_pressure(p, regime)
            integral = (math.sin(k_f * r) - k_f * r * math.cos(k_f * r)) / r ** 2
            direct = gamma / (r * p ** power) * integral
            amp = f_from_pressure(r, p, 0.0, regime).value
            assert abs(direct - amp) <= budget * abs(amp)


def test_from_pressure_thermal_dimensional_route():
    # fully dimensional occupancy integral via an independent integrator
    n = 8.22e35
    k_f = fermi_momentum_from_density(n)
    temp = 0.05 * fermi_temperature(k_f, NR)
    mu = chemical_potential(n, temp, NR)
    r = 1.0 / k_f
    integral, _ = quad(
        lambda k: k * occupation(k, mu, temp, NR) * math.sin(k * r),
        0.0,
        3.0 * k_f,
        limit=400,
        epsabs=1e-12 * k_f ** 2,
        epsrel=1e-12,
    )
    direct = 3.0 / (r * k_f ** 3) * integral
    amp = f_from_pressure(r, pressure_from_density(n, NR), temp, NR).value
    assert abs(direct - amp) < 1e-8


def test_from_pressure_rejects_bad_inputs():
    with pytest.raises(DomainError, match="pressure"):
        f_from_pressure(1e-10, -1.0, 0.0, NR)
    with pytest.raises(DomainError, match="temperature"):
        f_from_pressure(1e-10, 1e9, -1.0, NR)


# === distance constant ===


def test_zeta_ground_state():
    result = solve_zeta(0.0, NR)
    assert result.zeta == pytest.approx(ZETA0, abs=1e-9)
    assert result.residual < 1e-10
    # at t=0 the dispersion never enters, so the regimes agree exactly
    assert solve_zeta(0.0, ER).zeta == result.zeta


def test_zeta_thermal_reference_values():
    nr = solve_zeta(0.05, NR)
    assert nr.zeta == pytest.approx(1.8064976687432159, abs=1e-9)
    assert nr.residual < 1e-10
    er = solve_zeta(0.05, ER)
    assert er.zeta == pytest.approx(1.7821620418424771, abs=1e-9)
    assert er.residual < 1e-10


def test_zeta_continuous_at_low_temperature():
    assert abs(solve_zeta(1e-4, NR).zeta - ZETA0) < 1e-3


def test_zeta_shrinks_with_temperature():
    values = [solve_zeta(t, NR).zeta for t in (0.0, 0.05, 0.1, 0.3)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_zeta_classical_limit():
    # far above degeneracy the window shrinks like sqrt(2 ln 2 / t)
    t = 1e4
    assert solve_zeta(t, NR).zeta * math.sqrt(t) == pytest.approx(
        math.sqrt(2.0 * math.log(2.0)), abs=1e-3
    )


def test_zeta_reports_missing_bracket():
    # at extreme temperature the crossing drops below the scan window
    with pytest.raises(SolverError, match="sign change"):
        solve_zeta(4e6, NR)


def test_zeta_rejects_negative_temperature():
    with pytest.raises(DomainError, match="temperature"):
        solve_zeta(-0.1, NR)
