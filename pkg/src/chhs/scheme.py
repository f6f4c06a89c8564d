"""
The convex-splitting CHHS discretization: frozen coefficients, the per-step
nonlinear system in the variables (phi, mu, p), and velocity reconstruction.

Each time step solves ``N(phi, mu, p) = f`` with

    N_phi = phi - s div(M grad mu) - s div(A grad p)
    N_mu  = mu - g(phi) + w eps^2 lap(phi)
    N_p   = lap(p) + gamma div(A grad mu)

where ``A`` is the face average of the extrapolated phase field, ``M = 1 + gamma A^2``
and ``g`` is either the secant term ``chi(phi, phi_m)`` (second order, ``w = 3/4``)
or ``phi**3`` (first-order start-up step, ``w = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grid import CellField, GridSpec, MacField, _check_same, fill_ghosts_array, zero_normal_faces
from .operators import (
    avg_x_array,
    avg_y_array,
    div_array,
    face_average,
    grad_x_array,
    grad_y_array,
)

SECOND_ORDER = "chi"
FIRST_ORDER = "cube"
NL_SECANT, NL_CUBE, NL_AFFINE = 0, 1, 2


@dataclass(frozen=True)
class SchemeParams:
    """Model and step parameters: interface width, flow coupling and time step."""

    epsilon: float
    gamma: float
    dt: float

    def __post_init__(self) -> None:
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon!r}")
        if not self.gamma >= 0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma!r}")
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt!r}")


@dataclass
class FrozenCoefficients:
    phi_star: CellField
    a_phi_star: MacField
    mobility: MacField

    @classmethod
    def from_phi_star(cls, phi_star: CellField, gamma: float) -> "FrozenCoefficients":
        a = face_average(phi_star)
        mob = MacField(phi_star.spec, 1.0 + gamma * a.fx * a.fx, 1.0 + gamma * a.fy * a.fy)
        return cls(phi_star, a, mob)


def chi_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return 0.25 * (a * a + b * b) * (a + b)


def chi(a: CellField, b: CellField) -> CellField:
    """Secant nonlinearity ``(a^2 + b^2)(a + b) / 4``, pointwise."""
    _check_same(a.spec, b.spec)
    return CellField(a.spec, chi_array(a.values, b.values))


def extrapolate_star(phi_m: CellField, phi_mm1: CellField) -> CellField:
    """Second-order extrapolation ``1.5 phi_m - 0.5 phi_mm1`` to the half step."""
    _check_same(phi_m.spec, phi_mm1.spec)
    out = CellField(phi_m.spec, 1.5 * phi_m.values - 0.5 * phi_mm1.values)
    fill_ghosts_array(out.values)
    return out


class StepSystem:
    """
    The nonlinear operator of one time step on one grid level.

    Holds only frozen data: face coefficients, the phase field entering the
    secant term, and scalar parameters.  Coarse levels are built with
    :meth:`rediscretize` from restricted cell data.
    """

    def __init__(self, spec: GridSpec, params: SchemeParams, phi_star: np.ndarray,
                 phi_m: np.ndarray, kind: str = SECOND_ORDER, faces=None):
        if kind not in (SECOND_ORDER, FIRST_ORDER):
            raise ValueError(f"unknown nonlinearity {kind!r}")
        self.spec = spec
        self.params = params
        self.kind = kind
        self.h = spec.h
        self.s = params.dt
        self.gamma = params.gamma
        self.lap_weight = 0.75 if kind == SECOND_ORDER else 1.0
        self.c_lap = self.lap_weight * params.epsilon ** 2
        self.phi_star = phi_star
        self.phi_m = phi_m
        if faces is None:
            self.ax = avg_x_array(phi_star)
            self.ay = avg_y_array(phi_star)
            self.mx = 1.0 + self.gamma * self.ax * self.ax
            self.my = 1.0 + self.gamma * self.ay * self.ay
        else:
            # supplied directly on coarse levels; M is then not 1 + gamma A^2
            self.ax, self.ay, self.mx, self.my = faces
        # coarse levels replace g by an affine model; see set_linear_model
        self.lin_value: Optional[np.ndarray] = None
        self.lin_slope: Optional[np.ndarray] = None
        self.lin_base: Optional[np.ndarray] = None

    def rediscretize(self, spec: GridSpec, phi_star: np.ndarray, phi_m: np.ndarray,
                     faces=None) -> "StepSystem":
        """Same operator on another grid, optionally with prescribed face coefficients ``(ax, ay, mx, my)``."""
        return StepSystem(spec, self.params, phi_star, phi_m, self.kind, faces)

    def set_linear_model(self, value: np.ndarray, slope: np.ndarray, base: np.ndarray) -> None:
        """Use ``g(phi) = value + slope (phi - base)`` in place of the nonlinear term."""
        self.lin_value, self.lin_slope, self.lin_base = value, slope, base

    def nonlinear_model(self) -> tuple[int, np.ndarray, np.ndarray, np.ndarray]:
        """Compact description of g for compiled kernels: ``(mode, a1, a2, a3)``.

        mode 0: secant term with ``a1 = phi_m``; mode 1: cube; mode 2: affine
        model with value, slope and base in ``a1..a3``.
        """
        nx, ny = self.spec.nx, self.spec.ny
        empty = np.zeros((nx, ny))
        if self.lin_value is not None:
            return NL_AFFINE, self.lin_value, self.lin_slope, self.lin_base
        if self.kind == SECOND_ORDER:
            return NL_SECANT, np.ascontiguousarray(self.phi_m[1:-1, 1:-1]), empty, empty
        return NL_CUBE, empty, empty, empty

    def nonlinear(self, phi: np.ndarray) -> np.ndarray:
        if self.lin_value is not None:
            return self.lin_value + self.lin_slope * (phi - self.lin_base)
        if self.kind == SECOND_ORDER:
            return chi_array(phi, self.phi_m[1:-1, 1:-1])
        return phi * phi * phi

    def nonlinear_derivative(self, phi: np.ndarray) -> np.ndarray:
        if self.lin_slope is not None:
            return self.lin_slope
        if self.kind == SECOND_ORDER:
            pm = self.phi_m[1:-1, 1:-1]
            return 0.25 * (3.0 * phi * phi + 2.0 * phi * pm + pm * pm)
        return 3.0 * phi * phi

    def operator(self, phi: np.ndarray, mu: np.ndarray, p: np.ndarray):
        """Apply N to ghosted arrays; returns three (nx, ny) interior arrays."""
        h, s, gamma = self.h, self.s, self.gamma
        gmx = grad_x_array(mu, h)
        gmy = grad_y_array(mu, h)
        gpx = grad_x_array(p, h)
        gpy = grad_y_array(p, h)
        div_m = div_array(self.mx * gmx, self.my * gmy, h)
        div_ap = div_array(self.ax * gpx, self.ay * gpy, h)
        div_am = div_array(self.ax * gmx, self.ay * gmy, h)
        lap_phi = div_array(grad_x_array(phi, h), grad_y_array(phi, h), h)
        lap_p = div_array(gpx, gpy, h)
        n_phi = phi[1:-1, 1:-1] - s * div_m - s * div_ap
        n_mu = mu[1:-1, 1:-1] - self.nonlinear(phi[1:-1, 1:-1]) + self.c_lap * lap_phi
        n_p = lap_p + gamma * div_am
        return n_phi, n_mu, n_p

    def velocity(self, mu: np.ndarray, p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        h, gamma = self.h, self.gamma
        ux = -grad_x_array(p, h) - gamma * (self.ax * grad_x_array(mu, h))
        uy = -grad_y_array(p, h) - gamma * (self.ay * grad_y_array(mu, h))
        return ux, uy


def second_order_rhs(phi_m: CellField, phi_mm1: CellField, phi_star: CellField,
                     params: SchemeParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Source terms ``(f_phi, f_mu, f_p)`` collecting everything explicit in the step."""
    h = phi_m.spec.h
    lap_old = div_array(grad_x_array(phi_mm1.values, h), grad_y_array(phi_mm1.values, h), h)
    f_phi = phi_m.interior.copy()
    f_mu = -phi_star.interior - params.epsilon ** 2 * (0.25 * lap_old)
    f_p = np.zeros_like(f_phi)
    return f_phi, f_mu, f_p


def first_order_rhs(phi0: CellField) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    f_phi = phi0.interior.copy()
    return f_phi, -phi0.interior.copy(), np.zeros_like(f_phi)


def second_order_system(phi_m: CellField, phi_mm1: CellField, params: SchemeParams):
    """Build the step operator and its right-hand side from the two history levels."""
    _check_same(phi_m.spec, phi_mm1.spec)
    phi_star = extrapolate_star(phi_m, phi_mm1)
    system = StepSystem(phi_m.spec, params, phi_star.values, phi_m.values.copy(), SECOND_ORDER)
    return system, second_order_rhs(phi_m, phi_mm1, phi_star, params)


def first_order_system(phi0: CellField, params: SchemeParams):
    system = StepSystem(phi0.spec, params, phi0.values.copy(), phi0.values.copy(), FIRST_ORDER)
    return system, first_order_rhs(phi0)


def assemble_residual(candidate: tuple[CellField, CellField, CellField],
                      phi_m: CellField, phi_mm1: CellField,
                      params: SchemeParams) -> tuple[CellField, CellField, CellField]:
    """
    Residuals ``(r_phi, r_mu, r_p)`` of the second-order step equations.

    Each residual is ``N(candidate) - f`` and vanishes at the scheme solution:

        r_phi = phi - phi_m - s div(M(A phi*) grad mu) - s div(A phi* grad p)
        r_mu  = mu - chi(phi, phi_m) + phi* + eps^2 lap(3/4 phi + 1/4 phi_mm1)
        r_p   = lap(p) + gamma div(A phi* grad mu)

    Candidate fields must carry Neumann ghosts.
    """
    phi, mu, p = candidate
    system, (f_phi, f_mu, f_p) = second_order_system(phi_m, phi_mm1, params)
    n_phi, n_mu, n_p = system.operator(phi.values, mu.values, p.values)
    spec = phi_m.spec
    out = []
    for n, f in ((n_phi, f_phi), (n_mu, f_mu), (n_p, f_p)):
        r = CellField(spec)
        r.interior[...] = n - f
        out.append(r)
    return tuple(out)


def reconstruct_velocity(mu: CellField, p: CellField, coeffs: FrozenCoefficients,
                         params: SchemeParams) -> MacField:
    """Darcy velocity ``u = -grad p - gamma A(phi*) grad mu`` with zero normal flux."""
    h = mu.spec.h
    a = coeffs.a_phi_star
    ux = -grad_x_array(p.values, h) - params.gamma * (a.fx * grad_x_array(mu.values, h))
    uy = -grad_y_array(p.values, h) - params.gamma * (a.fy * grad_y_array(mu.values, h))
    return zero_normal_faces(MacField(mu.spec, ux, uy))


def residual_norms(system: StepSystem, rhs, phi: np.ndarray, mu: np.ndarray,
                   p: np.ndarray) -> tuple[float, float, float]:
    """Root-mean-square residual of each equation (discrete L2 norm over |Omega|^(1/2))."""
    n = system.operator(phi, mu, p)
    return tuple(float(np.sqrt(np.mean((ni - fi) ** 2))) for ni, fi in zip(n, rhs))


def initial_chemical_potential(phi: CellField, params: SchemeParams) -> CellField:
    """``mu = phi^3 - phi - eps^2 lap(phi)``; a starting guess for the first solve."""
    h = phi.spec.h
    v = phi.values
    lap = div_array(grad_x_array(v, h), grad_y_array(v, h), h)
    interior = v[1:-1, 1:-1]
    mu = interior ** 3 - interior - params.epsilon ** 2 * lap
    return CellField.from_interior(phi.spec, mu)
