import numpy as np
import pytest

from cdelab import dynamics, integrators, orbits
from cdelab.errors import NewtonDivergence, NonFiniteState, EmptyTrajectory


def test_equilibria_are_fixed_points():
    for p in (dynamics.P0, dynamics.P_PLUS, dynamics.P_MINUS):
        cfg = integrators.StepperConfig(method="implicit_midpoint", dt=0.05)
        assert np.linalg.norm(integrators.step(p, cfg) - p) <= cfg.newton_tol
        cfg = integrators.StepperConfig(method="rk4", dt=0.05)
        assert np.linalg.norm(integrators.step(p, cfg) - p) <= 1e-15


def test_rk4_step_taylor_oracle():
    # second-order Taylor at (1,0,0,0): f = (0,1/4,0,0), (Jf) = (1/4,0,0,0)
    s = np.array([1.0, 0.0, 0.0, 0.0])
    dt = 1e-3
    f = np.array([0.0, 0.25, 0.0, 0.0])
    jf = np.array([0.25, 0.0, 0.0, 0.0])
    taylor = s + dt * f + 0.5 * dt ** 2 * jf
    out = integrators.rk4_step(s, dt)
    assert np.max(np.abs(out - taylor)) <= 1e-7


def test_integrate_constant_from_equilibrium():
    cfg = integrators.StepperConfig(method="implicit_midpoint", dt=1e-2)
    tr = integrators.integrate(dynamics.P_PLUS, 10.0, cfg)
    assert np.max(np.abs(tr.states - dynamics.P_PLUS)) <= 1e-11
    assert integrators.energy_drift(tr) <= 1e-14


def test_rk4_tracks_homoclinic_profile():
    # closed-form orbit as an exact-solution oracle
    prof = orbits.derived_profile()
    cfg = integrators.StepperConfig(method="rk4", dt=1e-3)
    tr = integrators.integrate(prof(0.0), 10.0, cfg)
    reference = prof(tr.times).T
    assert np.max(np.abs(tr.states - reference)) <= 1e-6


def test_time_reversal_of_the_flow():
    # integrating forward then swapping equals integrating the swapped state
    # backward
    s0 = np.array([1.1, 0.05, 0.3, 0.35])
    cfg = integrators.StepperConfig(method="rk4", dt=1e-3)
    fwd = integrators.integrate(s0, 5.0, cfg)
    back = integrators.integrate(dynamics.time_reversal_swap(s0), -5.0, cfg)
    # back.times runs [-5, 0]; back.states[-1] is the initial state
    swapped = dynamics.time_reversal_swap(fwd.states.T).T
    np.testing.assert_allclose(back.states[::-1], swapped, rtol=0, atol=1e-8)


def test_midpoint_is_time_symmetric():
    s = np.array([1.05, 0.02, 0.33, 0.37])
    fwd = integrators.implicit_midpoint_step(s, 1e-2)
    back = integrators.implicit_midpoint_step(fwd, -1e-2)
    assert np.linalg.norm(back - s) <= 1e-11


def test_energy_drift_zero_on_constant():
    times = np.linspace(0.0, 1.0, 11)
    states = np.tile(dynamics.P_PLUS, (11, 1))
    assert integrators.energy_drift(integrators.Trajectory(times, states)) == 0.0


def test_midpoint_drift_small_and_second_order(lyapunov_orbits):
    # The equilibria are saddle-centers (Floquet exponent 2^(1/4)), so any
    # nonconstant bounded orbit can be shadowed in double precision only up
    # to t ~ 20 before the hyperbolic direction amplifies rounding; the
    # drift law is checked on that attainable window.
    orb = lyapunov_orbits[1e-2]
    drifts = {}
    for dt in (2e-3, 1e-3):
        cfg = integrators.StepperConfig(method="implicit_midpoint", dt=dt)
        tr = integrators.integrate(orb.initial_state, 15.0, cfg)
        drifts[dt] = integrators.energy_drift(tr)
    assert drifts[1e-3] <= 1e-8
    ratio = drifts[2e-3] / drifts[1e-3]
    assert 3.0 <= ratio <= 5.0        # O(dt^2)


def test_rk4_order_four_by_step_halving(lyapunov_orbits):
    orb = lyapunov_orbits[1e-2]
    drifts = {}
    for dt in (2e-2, 1e-2):
        cfg = integrators.StepperConfig(method="rk4", dt=dt)
        tr = integrators.integrate(orb.initial_state, 4.0, cfg)
        drifts[dt] = integrators.energy_drift(tr)
    ratio = drifts[2e-2] / drifts[1e-2]
    assert 11.0 <= ratio <= 22.0      # ~16x for a fourth-order method


def test_nonfinite_state_detected():
    cfg = integrators.StepperConfig(method="rk4", dt=0.1)
    with pytest.raises(NonFiniteState):
        integrators.integrate(np.array([1e9, 1e9, 0.0, 1e3]), 60.0, cfg)


def test_newton_divergence_raised():
    cfg = integrators.StepperConfig(method="implicit_midpoint", dt=1.0,
                                    newton_tol=1e-16, max_newton_iters=1)
    with pytest.raises(NewtonDivergence):
        integrators.step(np.array([1.0, 0.5, 0.3, 0.2]), cfg)


def test_empty_trajectory_guard():
    tr = integrators.Trajectory(times=np.empty(0), states=np.empty((0, 4)))
    with pytest.raises(EmptyTrajectory):
        integrators.energy_drift(tr)


def test_config_validation():
    with pytest.raises(ValueError):
        integrators.StepperConfig(dt=-1.0)
    with pytest.raises(ValueError):
        integrators.StepperConfig(method="euler")
    with pytest.raises(ValueError):
        integrators.integrate(dynamics.P0, 0.0,
                              integrators.StepperConfig(dt=1e-2))
