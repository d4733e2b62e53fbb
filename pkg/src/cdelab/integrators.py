"""Fixed-step time integration of the cylinder system with energy monitoring.

Two steppers are provided: the implicit midpoint rule (symplectic for this
canonical Hamiltonian system, the conservative default for long-time runs)
and classical RK4 for cross-validation and high-accuracy short-horizon
tracking.  Steps are uniform; the phase space is low-dimensional and smooth,
so no adaptive control is attempted.
"""

import numpy as np
from dataclasses import dataclass, field

from . import dynamics, linear
from .errors import NewtonDivergence, NonFiniteState, EmptyTrajectory

#: a trajectory component beyond this magnitude signals escape along the
#: hyperbolic direction
OVERFLOW_LIMIT = 1e12


@dataclass(frozen=True)
class StepperConfig:
    method: str = "implicit_midpoint"   # or "rk4"
    dt: float = 1e-3
    newton_tol: float = 1e-12
    max_newton_iters: int = 25

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.newton_tol <= 0:
            raise ValueError("newton_tol must be positive")
        if self.method not in ("implicit_midpoint", "rk4"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass
class Trajectory:
    """Dense solution samples on a uniform, strictly increasing time grid."""
    times: np.ndarray
    states: np.ndarray          # shape (n, 4)
    energy_series: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.energy_series is None:
            self.energy_series = dynamics.hamiltonian(self.states.T)

    def __len__(self):
        return len(self.times)


def rk4_step(s, dt, f=dynamics.vector_field):
    """One classical Runge-Kutta step; works on (4,) states or (4, m) batches."""
    k1 = f(s)
    k2 = f(s + 0.5 * dt * k1)
    k3 = f(s + 0.5 * dt * k2)
    k4 = f(s + dt * k3)
    return s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def implicit_midpoint_step(s, dt, newton_tol=1e-12, max_iters=25):
    """One implicit midpoint step, midpoint fixed point solved by Newton."""
    s = np.asarray(s, dtype=float)
    x = s + dt * dynamics.vector_field(s)          # explicit Euler predictor
    eye = np.eye(4)
    for _ in range(max_iters):
        mid = 0.5 * (s + x)
        res = x - s - dt * dynamics.vector_field(mid)
        if np.linalg.norm(res) <= newton_tol:
            return x
        jac = eye - 0.5 * dt * jacobian_matrix(mid)
        x = x - np.linalg.solve(jac, res)
    mid = 0.5 * (s + x)
    res = x - s - dt * dynamics.vector_field(mid)
    if np.linalg.norm(res) <= newton_tol:
        return x
    raise NewtonDivergence(
        f"implicit midpoint Newton stalled at residual {np.linalg.norm(res):.3e}")


def jacobian_matrix(s):
    return linear.jacobian_at(s, chart="original").entries


def step(s, cfg):
    """Advance one step with the configured method."""
    if cfg.method == "rk4":
        return rk4_step(s, cfg.dt)
    return implicit_midpoint_step(s, cfg.dt, cfg.newton_tol, cfg.max_newton_iters)


def integrate(s0, t_final, cfg):
    """Integrate from t=0 to t=t_final on a uniform grid.

    Negative t_final integrates backwards; the returned trajectory is then
    reported on the increasing grid [t_final, 0].  The step count is
    round(|t_final| / dt), so dt is adjusted slightly when it does not divide
    t_final evenly.  Raises NonFiniteState when a component exceeds 1e12.
    """
    if t_final == 0:
        raise ValueError("t_final must be nonzero")
    s0 = np.asarray(s0, dtype=float)
    span = abs(t_final)
    n_steps = max(1, int(round(span / cfg.dt)))
    dt = span / n_steps
    sign = 1.0 if t_final > 0 else -1.0

    states = np.empty((n_steps + 1, 4))
    states[0] = s0
    s = s0
    for i in range(n_steps):
        if cfg.method == "rk4":
            s = rk4_step(s, sign * dt)
        else:
            s = implicit_midpoint_step(s, sign * dt, cfg.newton_tol,
                                       cfg.max_newton_iters)
        if not np.all(np.isfinite(s)) or np.max(np.abs(s)) > OVERFLOW_LIMIT:
            raise NonFiniteState(f"state overflow after step {i + 1}")
        states[i + 1] = s
    times = sign * dt * np.arange(n_steps + 1)
    if sign < 0:
        times = times[::-1].copy()
        states = states[::-1].copy()
    return Trajectory(times=times, states=states)


def energy_drift(tr):
    """max_k |H(s_k) - H(s_0)| along a trajectory."""
    if len(tr) == 0:
        raise EmptyTrajectory("cannot measure drift of an empty trajectory")
    return float(np.max(np.abs(tr.energy_series - tr.energy_series[0])))
