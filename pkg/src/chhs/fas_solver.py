"""
Full Approximation Scheme multigrid for the coupled (phi, mu, p) step system.

Smoothing is collective red-black Gauss-Seidel: each cell solves its own
3x3 system for (phi, mu, p) with neighbours frozen and the nonlinear term
linearized once about the current value.  Coarse operators use face
coefficients restricted from the finer level and an affine model of the
nonlinear term; transfers are 2x2 block averaging and piecewise-constant
injection.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .grid import CellField, GridSpec, fill_ghosts_array
from ._kernels import sweep_color
from .scheme import StepSystem

log = logging.getLogger(__name__)

RED, BLACK = 0, 1


class SolverDivergence(RuntimeError):
    """Raised when the FAS iteration fails to reach tolerance within the cycle cap."""

    def __init__(self, message: str, residuals: tuple[float, ...], cycles: int,
                 history: list[float] | None = None):
        super().__init__(message)
        self.residuals = residuals
        self.cycles = cycles
        self.history = history or []


class SmootherFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class MgConfig:
    nu1: int = 2
    nu2: int = 2
    coarsest: int = 2
    tol: float = 1e-10
    max_cycles: int = 50
    coarse_sweeps: int = 20

    def __post_init__(self) -> None:
        if self.nu1 < 0 or self.nu2 < 0 or self.nu1 + self.nu2 == 0:
            raise ValueError("need at least one smoothing sweep per cycle")
        if self.coarsest < 1:
            raise ValueError("coarsest grid must have at least one cell per side")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_cycles < 1:
            raise ValueError("max_cycles must be at least 1")


# transfers ---------------------------------------------------------------

def restrict_array(fine: np.ndarray) -> np.ndarray:
    """Average 2x2 blocks of a ghosted fine array; returns a ghosted coarse array."""
    f = fine[1:-1, 1:-1]
    nx, ny = f.shape
    if nx % 2 or ny % 2:
        raise ValueError(f"cannot restrict a {nx}x{ny} field")
    c = np.empty((nx // 2 + 2, ny // 2 + 2))
    c[1:-1, 1:-1] = 0.25 * ((f[0::2, 0::2] + f[1::2, 0::2]) + (f[0::2, 1::2] + f[1::2, 1::2]))
    return fill_ghosts_array(c)


def prolong_array(coarse: np.ndarray) -> np.ndarray:
    """Inject each coarse value into its 2x2 fine block; returns a ghosted fine array."""
    c = coarse[1:-1, 1:-1]
    nx, ny = c.shape
    f = np.empty((2 * nx + 2, 2 * ny + 2))
    f[1:-1, 1:-1] = np.repeat(np.repeat(c, 2, axis=0), 2, axis=1)
    return fill_ghosts_array(f)


def restrict_cell(fine: CellField) -> CellField:
    return CellField(fine.spec.coarsen(), restrict_array(fine.values))


def prolong_cell(coarse: CellField) -> CellField:
    return CellField(coarse.spec.refine(), prolong_array(coarse.values))


def restrict_interior(r: np.ndarray) -> np.ndarray:
    return 0.25 * ((r[0::2, 0::2] + r[1::2, 0::2]) + (r[0::2, 1::2] + r[1::2, 1::2]))


def restrict_faces(kx: np.ndarray, ky: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coarse face value = mean of the two fine faces lying on it."""
    cx = 0.5 * (kx[0::2, 0::2] + kx[0::2, 1::2])
    cy = 0.5 * (ky[0::2, 0::2] + ky[1::2, 0::2])
    return cx, cy


def coarse_slope(fine: StepSystem, slope: np.ndarray) -> np.ndarray:
    """
    Coarse-level slope of the nonlinear term.

    For large time steps the coarse correction sees the inverse of
    ``slope - c lap``, so blocks are combined by a harmonic mean after shifting
    the slope by the local gradient-energy stiffness ``2 c / h^2``.  A plain
    arithmetic mean overstates the stiffness of blocks containing near-zero
    slopes and stalls the cycle.
    """
    shift = 2.0 * fine.c_lap / (fine.h * fine.h)
    inv = restrict_interior(1.0 / (slope + shift))
    return np.maximum(1.0 / inv - shift, 0.0)


# hierarchy ---------------------------------------------------------------

@dataclass
class MgLevel:
    """One grid level: operator, unknowns (ghosted) and right-hand sides (interior)."""

    system: StepSystem
    phi: np.ndarray
    mu: np.ndarray
    p: np.ndarray
    f_phi: np.ndarray
    f_mu: np.ndarray
    f_p: np.ndarray
    stencil: dict = field(default_factory=dict)

    @property
    def spec(self) -> GridSpec:
        return self.system.spec


def check_multigrid_size(spec: GridSpec, coarsest: int) -> int:
    """Number of levels obtained by halving both sides until the short side reaches ``coarsest``."""
    nx, ny = spec.nx, spec.ny
    levels = 1
    while min(nx, ny) > coarsest:
        if nx % 2 or ny % 2:
            break
        nx, ny = nx // 2, ny // 2
        levels += 1
    if min(nx, ny) != coarsest:
        raise ValueError(
            f"multigrid needs {spec.nx}x{spec.ny} to halve down to a {coarsest}-cell coarsest grid; "
            f"coarsening stops at {nx}x{ny}"
        )
    return levels


def _masked_stencil(system: StepSystem) -> dict:
    """Face coefficients with boundary faces zeroed, as (east, west, north, south, sum) stacks per cell."""
    out = {}
    nx, ny = system.spec.nx, system.spec.ny
    for name, kx, ky in (("m", system.mx, system.my), ("a", system.ax, system.ay),
                         ("o", np.ones((nx + 1, ny)), np.ones((nx, ny + 1)))):
        kx = kx.copy()
        ky = ky.copy()
        kx[0, :] = kx[-1, :] = 0.0
        ky[:, 0] = ky[:, -1] = 0.0
        e, w, n, s = kx[1:, :], kx[:-1, :], ky[:, 1:], ky[:, :-1]
        out[name] = np.stack((e, w, n, s, ((e + w) + n) + s))
    return out


def build_hierarchy(system: StepSystem, rhs, phi: np.ndarray, mu: np.ndarray, p: np.ndarray,
                    config: MgConfig) -> list[MgLevel]:
    """Levels ordered finest first.  Frozen coefficients are restricted once per solve."""
    nlev = check_multigrid_size(system.spec, config.coarsest)
    f_phi, f_mu, f_p = rhs
    levels = [MgLevel(system, phi, mu, p, f_phi, f_mu, f_p)]
    for _ in range(nlev - 1):
        fine = levels[-1].system
        spec = fine.spec.coarsen()
        # Restricting A and M separately keeps the sub-block variance of A in
        # the coarse mobility; recomputing M from a coarse A loses it and the
        # flow-coupled cycle stalls.
        faces = restrict_faces(fine.ax, fine.ay) + restrict_faces(fine.mx, fine.my)
        coarse = fine.rediscretize(spec, restrict_array(fine.phi_star), restrict_array(fine.phi_m), faces)
        z = np.zeros((spec.nx + 2, spec.ny + 2))
        zi = np.zeros((spec.nx, spec.ny))
        levels.append(MgLevel(coarse, z.copy(), z.copy(), z.copy(), zi.copy(), zi.copy(), zi.copy()))
    for lev in levels:
        lev.stencil = _masked_stencil(lev.system)
    return levels


# smoothing ---------------------------------------------------------------

def _pin_pressure(p: np.ndarray) -> None:
    p[1:-1, 1:-1] -= np.mean(p[1:-1, 1:-1])
    fill_ghosts_array(p)


def smooth(level: MgLevel, sweeps: int) -> None:
    """
    Red-black collective Newton-Gauss-Seidel sweeps, in place.

    Cells with even ``i + j`` (interior indices from 0) are red and are
    updated first.  At each cell the nonlinear term is linearized once about
    the current value, ``g ~ g0 + g'(phi - phi0)``, and the 3x3 system for
    ``(phi, mu, p)`` with neighbours frozen is solved in closed form by
    eliminating ``p`` and then ``mu``.  Boundary faces carry zero
    coefficients, so ghost values never enter.  The pressure mean is
    re-pinned after every sweep.
    """
    sysm = level.system
    st = level.stencil
    mode, a1, a2, a3 = sysm.nonlinear_model()
    for _ in range(sweeps):
        for color in (RED, BLACK):
            ok = sweep_color(level.phi, level.mu, level.p, level.f_phi, level.f_mu, level.f_p,
                             st["m"], st["a"], st["o"], mode, a1, a2, a3,
                             sysm.h, sysm.s, sysm.gamma, sysm.c_lap, color)
            if not ok:
                raise SmootherFailure("non-finite value in local block solve")
            fill_ghosts_array(level.phi)
            fill_ghosts_array(level.mu)
            fill_ghosts_array(level.p)
        _pin_pressure(level.p)


def level_defect(level: MgLevel):
    n_phi, n_mu, n_p = level.system.operator(level.phi, level.mu, level.p)
    return level.f_phi - n_phi, level.f_mu - n_mu, level.f_p - n_p


def level_residual_norm(level: MgLevel) -> float:
    return max(float(np.sqrt(np.mean(r * r))) for r in level_defect(level))


def _solve_coarsest(level: MgLevel, config: MgConfig) -> None:
    prev = level_residual_norm(level)
    for _ in range(config.coarse_sweeps):
        smooth(level, 1)
        cur = level_residual_norm(level)
        if cur <= 1e-3 * config.tol or cur > 0.95 * prev:
            break
        prev = cur


def v_cycle(levels: list[MgLevel], k: int, config: MgConfig) -> None:
    """One FAS V(nu1, nu2) cycle starting at level ``k`` (0 = finest)."""
    lev = levels[k]
    if k == len(levels) - 1:
        _solve_coarsest(lev, config)
        return
    smooth(lev, config.nu1)
    r_phi, r_mu, r_p = level_defect(lev)
    coarse = levels[k + 1]
    base = []
    for fine_arr, coarse_arr in ((lev.phi, coarse.phi), (lev.mu, coarse.mu), (lev.p, coarse.p)):
        restricted = restrict_array(fine_arr)
        coarse_arr[...] = restricted
        base.append(restricted)
    fine_phi = lev.phi[1:-1, 1:-1]
    coarse.system.set_linear_model(
        restrict_interior(lev.system.nonlinear(fine_phi)),
        coarse_slope(lev.system, lev.system.nonlinear_derivative(fine_phi)),
        base[0][1:-1, 1:-1].copy(),
    )
    n_phi, n_mu, n_p = coarse.system.operator(coarse.phi, coarse.mu, coarse.p)
    coarse.f_phi = restrict_interior(r_phi) + n_phi
    coarse.f_mu = restrict_interior(r_mu) + n_mu
    coarse.f_p = restrict_interior(r_p) + n_p
    v_cycle(levels, k + 1, config)
    for fine_arr, coarse_arr, b in zip((lev.phi, lev.mu, lev.p), (coarse.phi, coarse.mu, coarse.p), base):
        corr = coarse_arr - b
        fine_arr[1:-1, 1:-1] += prolong_array(corr)[1:-1, 1:-1]
        fill_ghosts_array(fine_arr)
    _pin_pressure(lev.p)
    smooth(lev, config.nu2)


@dataclass
class SolveResult:
    phi: CellField
    mu: CellField
    p: CellField
    cycles: int
    residuals: tuple[float, float, float]
    history: list[float]


def composite_residual(level: MgLevel) -> tuple[float, float, float]:
    return tuple(float(np.sqrt(np.mean(r * r))) for r in level_defect(level))


def solve(system: StepSystem, rhs, guess: tuple[CellField, CellField, CellField],
          config: MgConfig = MgConfig()) -> SolveResult:
    """
    Iterate V-cycles until the largest RMS residual of the three equations is below ``config.tol``.

    Raises
    ------
    SolverDivergence
        If ``config.max_cycles`` cycles do not reach the tolerance.
    """
    spec = system.spec
    phi = fill_ghosts_array(guess[0].values.copy())
    mu = fill_ghosts_array(guess[1].values.copy())
    p = guess[2].values.copy()
    _pin_pressure(p)
    levels = build_hierarchy(system, rhs, phi, mu, p, config)
    fine = levels[0]
    res = composite_residual(fine)
    history = [max(res)]
    cycles = 0
    while max(res) > config.tol:
        if cycles >= config.max_cycles:
            raise SolverDivergence(
                f"FAS did not converge in {cycles} cycles (residuals {res})", res, cycles, history
            )
        v_cycle(levels, 0, config)
        cycles += 1
        res = composite_residual(fine)
        history.append(max(res))
        if not np.isfinite(history[-1]):
            raise SolverDivergence("FAS iteration produced non-finite residual", res, cycles, history)
    log.debug("FAS converged in %d cycles, residual %.3e", cycles, max(res))
    return SolveResult(CellField(spec, fine.phi), CellField(spec, fine.mu), CellField(spec, fine.p),
                       cycles, res, history)
