"""Time advancement: the first-order start-up step and the two-level second-order step."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .fas_solver import MgConfig, SolveResult, solve
from .grid import CellField, MacField, _check_same
from .scheme import (
    FrozenCoefficients,
    SchemeParams,
    extrapolate_star,
    first_order_system,
    initial_chemical_potential,
    reconstruct_velocity,
    second_order_system,
)


@dataclass
class TimeState:
    """Two history levels plus the last solved chemical potential, pressure and velocity."""

    phi_m: CellField
    phi_mm1: CellField
    mu: CellField
    p: CellField
    u: MacField
    mu_prev: CellField | None = None
    p_prev: CellField | None = None
    step: int = 1
    time: float = 0.0
    last_solve: SolveResult | None = field(default=None, repr=False)
    coeffs: FrozenCoefficients | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        for f in (self.phi_mm1, self.mu, self.p, self.u):
            _check_same(self.phi_m.spec, f.spec)

    @property
    def spec(self):
        return self.phi_m.spec


def bootstrap_first_step(phi0: CellField, params: SchemeParams,
                         mg_config: MgConfig = MgConfig()) -> TimeState:
    """
    Produce the second history level with one first-order convex-splitting step.

    The start-up step treats ``phi^3`` and the gradient energy implicitly and
    ``phi0`` explicitly, with all flow coefficients frozen at ``phi0``.  It is
    solved with the same multigrid machinery as the second-order step.
    Returns a state at step 1 holding ``(phi1, phi0)``.
    """
    system, rhs = first_order_system(phi0, params)
    mu0 = initial_chemical_potential(phi0, params)
    result = solve(system, rhs, (phi0, mu0, CellField(phi0.spec)), mg_config)
    coeffs = FrozenCoefficients.from_phi_star(phi0, params.gamma)
    u = reconstruct_velocity(result.mu, result.p, coeffs, params)
    return TimeState(result.phi, phi0.copy(), result.mu, result.p, u, step=1, time=params.dt,
                     last_solve=result, coeffs=coeffs)


def state_from_exact(phi0: CellField, phi1: CellField, params: SchemeParams) -> TimeState:
    """History built from two prescribed levels (e.g. projections of a known solution)."""
    mu = initial_chemical_potential(phi1, params)
    return TimeState(phi1.copy(), phi0.copy(), mu, CellField(phi0.spec), MacField(phi0.spec),
                     step=1, time=params.dt)


def _linear_extrapolation(new: CellField, old: CellField | None) -> CellField:
    if old is None:
        return new
    return CellField(new.spec, 2.0 * new.values - old.values)


def initial_guess(state: TimeState) -> tuple[CellField, CellField, CellField]:
    """Linear extrapolation in time of the last two solutions; falls back to the last one."""
    return (
        _linear_extrapolation(state.phi_m, state.phi_mm1),
        _linear_extrapolation(state.mu, state.mu_prev),
        _linear_extrapolation(state.p, state.p_prev),
    )


def advance_step(state: TimeState, params: SchemeParams,
                 mg_config: MgConfig = MgConfig()) -> TimeState:
    """
    One second-order step: returns a new state holding ``(phi^{m+1}, phi^m)``.

    The solver starts from a linear extrapolation in time of the last two
    solutions (see :func:`initial_guess`).

    Raises :class:`~chhs.fas_solver.SolverDivergence` when the nonlinear
    solve does not converge.
    """
    if state.step < 1:
        raise ValueError("advance_step needs two history levels (step >= 1)")
    system, rhs = second_order_system(state.phi_m, state.phi_mm1, params)
    result = solve(system, rhs, initial_guess(state), mg_config)
    phi_star = CellField(state.spec, system.phi_star)
    coeffs = FrozenCoefficients.from_phi_star(phi_star, params.gamma)
    u = reconstruct_velocity(result.mu, result.p, coeffs, params)
    return TimeState(result.phi, state.phi_m.copy(), result.mu, result.p, u,
                     mu_prev=state.mu.copy(), p_prev=state.p.copy(), step=state.step + 1,
                     time=(state.step + 1) * params.dt,
                     last_solve=result, coeffs=coeffs)
