import numpy as np
import pytest

from cdelab import dynamics, integrators, linear, orbits
from cdelab.errors import ConvergedToEquilibrium, NonConvergence

T0 = 2.0 ** 0.75 * np.pi


def small_orbit_guess(h):
    rep = linear.eigenvalues_4x4(linear.matrix_c())
    om = rep.elliptic_omega
    rot = dynamics.P_PLUS_ROTATED + h * np.array([1.0, 0.0, om ** 2, 0.0])
    return dynamics.from_rotated(rot)


# ----------------------------------------------------------------------
# homoclinic derivation

def test_derived_constants():
    rep = orbits.derive_constants()
    assert rep.alpha_sq == 1.5
    assert rep.beta_sq == 0.375
    assert rep.residual_derived <= 1e-10
    # the quoted amplitude pair does not satisfy the system; its residual is
    # recorded, not asserted to equal anything
    assert rep.residual_quoted > 0.0


def test_profile_pinned_point_and_energy(homoclinic_profile):
    s0 = homoclinic_profile(0.0)
    np.testing.assert_allclose(
        s0, [np.sqrt(1.5), 0.0, np.sqrt(0.375), np.sqrt(0.375)], atol=1e-15)
    t = np.linspace(-10.0, 10.0, 4001)
    assert np.max(np.abs(homoclinic_profile.energy(t))) <= 1e-12
    assert np.max(homoclinic_profile.ode_residual(t)) <= 1e-10


def test_profile_decay_to_saddle(homoclinic_profile):
    for t in (20.0, -20.0):
        assert np.linalg.norm(homoclinic_profile(t)) <= 1e-4


def test_profile_time_reversal_symmetry(homoclinic_profile):
    t = np.linspace(-7.0, 7.0, 101)
    swapped = dynamics.time_reversal_swap(homoclinic_profile(-t))
    np.testing.assert_allclose(swapped, homoclinic_profile(t), atol=1e-15)


def test_limit_energy_quadrature_oracle():
    # (9/8) int cosh^-3 = (9/8)(pi/2) = 9 pi / 32
    val = orbits.limit_energy_quadrature()
    assert abs(val - 9.0 * np.pi / 32.0) <= 1e-8
    assert abs(orbits.DELTA0 - 9.0 * np.pi / 32.0) == 0.0


# ----------------------------------------------------------------------
# shooting

def test_shoot_periodic_fixed_period():
    # half-period slightly above T0/2 admits a small nonconstant orbit
    orb = orbits.shoot_periodic(5.3 / 2.0, small_orbit_guess(0.031))
    assert orb.residual <= 1e-9
    assert np.linalg.norm(orb.initial_state - dynamics.P_PLUS) > 1e-6
    drift = np.max(np.abs(orb.trajectory.energy_series
                          - orb.trajectory.energy_series[0]))
    assert drift <= 1e-8


def test_shoot_rejects_equilibrium_guess():
    with pytest.raises(ConvergedToEquilibrium):
        orbits.shoot_periodic(2.7, dynamics.P_PLUS)


def test_lyapunov_family_period_limit(lyapunov_orbits):
    periods = {h: orb.period for h, orb in lyapunov_orbits.items()}
    assert abs(periods[1e-3] - T0) / T0 <= 0.01
    # periods decrease monotonically toward T0 as the amplitude shrinks
    assert periods[1e-2] > periods[1e-3] > periods[1e-4] > T0 - 1e-6


def test_lyapunov_family_shrinks_to_equilibrium(lyapunov_orbits):
    dists = [np.max(np.linalg.norm(orb.trajectory.states - dynamics.P_PLUS,
                                   axis=1))
             for orb in (lyapunov_orbits[1e-2], lyapunov_orbits[1e-3],
                         lyapunov_orbits[1e-4])]
    assert dists[0] > dists[1] > dists[2]
    for orb in lyapunov_orbits.values():
        assert orb.residual <= 1e-9
        assert np.linalg.norm(orb.initial_state - dynamics.P_PLUS) >= 1e-6


def test_lyapunov_amplitude_zero_rejected():
    with pytest.raises(ConvergedToEquilibrium):
        orbits.lyapunov_family([0.0])


# ----------------------------------------------------------------------
# distance to the homoclinic

def profile_orbit(shift=0.0, half_window=15.0):
    prof = orbits.derived_profile()
    times = np.linspace(-half_window, half_window, 3001)
    states = prof(times - shift).T
    tr = integrators.Trajectory(times=times, states=states)
    return orbits.PeriodicOrbit(half_period=half_window,
                                initial_state=states[0], trajectory=tr,
                                energy=0.0, residual=0.0)


def test_distance_zero_on_profile_samples():
    d = orbits.distance_to_homoclinic(profile_orbit())
    assert d["sup_dist"] <= 1e-12
    assert abs(d["shift"]) <= 1e-9


def test_distance_recovers_shift():
    d = orbits.distance_to_homoclinic(profile_orbit(shift=1.3))
    assert abs(d["shift"] - 1.3) <= 1e-2
    assert d["sup_dist"] <= 1e-6


def test_ground_state_orbit_near_homoclinic(ground_states):
    orb = orbits.field_to_orbit(ground_states[0.05].field)
    d = orbits.distance_to_homoclinic(orb)
    assert d["sup_dist"] <= 5e-2


def test_field_to_orbit_invariants(ground_states):
    orb = orbits.field_to_orbit(ground_states[0.1].field)
    assert orb.residual <= 1e-9                       # periodic closure
    drift = np.max(np.abs(orb.trajectory.energy_series
                          - orb.trajectory.energy_series[0]))
    assert drift <= 1e-8                              # H constant on the orbit
    dmin = min(np.linalg.norm(orb.initial_state - p)
               for p in (dynamics.P0, dynamics.P_PLUS, dynamics.P_MINUS))
    assert dmin >= 1e-6                               # nonconstant


# ----------------------------------------------------------------------
# continuation diagram

def test_period_energy_diagram(ground_states):
    diagram = orbits.period_energy_diagram([0.2, 0.1])
    assert abs(diagram["delta0"] - orbits.DELTA0) <= 1e-8
    rows = diagram["rows"]
    assert all(row["converged"] for row in rows)
    assert rows[0]["gap"] > rows[1]["gap"]
    for row in rows:
        assert row["delta_eps"] < 1.0 / (4.0 * row["epsilon"])
        assert row["T"] == 1.0 / row["epsilon"]


def test_period_energy_diagram_validates_eps():
    with pytest.raises(ValueError):
        orbits.period_energy_diagram([0.3])
