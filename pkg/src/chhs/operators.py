"""
Discrete calculus on the MAC grid: differences, averages, inner products, norms.

The ``*_array`` helpers work on raw ghosted arrays and are what the solver
uses in its inner loops; the public functions wrap them for
:class:`~chhs.grid.CellField` / :class:`~chhs.grid.MacField`.
"""

from __future__ import annotations

import numpy as np

from .grid import CellField, GridSpec, MacField, _check_same, fill_ghosts_neumann

SUPPORTED_P = (1, 2, 4)


# raw array kernels -------------------------------------------------------

def grad_x_array(a: np.ndarray, h: float) -> np.ndarray:
    return (a[1:, 1:-1] - a[:-1, 1:-1]) / h


def grad_y_array(a: np.ndarray, h: float) -> np.ndarray:
    return (a[1:-1, 1:] - a[1:-1, :-1]) / h


def div_array(fx: np.ndarray, fy: np.ndarray, h: float) -> np.ndarray:
    """Face-to-center divergence; returns the (nx, ny) interior."""
    return (fx[1:, :] - fx[:-1, :]) / h + (fy[:, 1:] - fy[:, :-1]) / h


def avg_x_array(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a[:-1, 1:-1] + a[1:, 1:-1])


def avg_y_array(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a[1:-1, :-1] + a[1:-1, 1:])


def face_weights(nx: int, ny: int) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature weights of the face inner product: 1 inside, 1/2 on the boundary."""
    wx = np.ones((nx + 1, ny))
    wx[0, :] = wx[-1, :] = 0.5
    wy = np.ones((nx, ny + 1))
    wy[:, 0] = wy[:, -1] = 0.5
    return wx, wy


def _wrap_cell(spec: GridSpec, interior: np.ndarray) -> CellField:
    out = CellField(spec)
    out.interior[...] = interior
    return out


# operators ----------------------------------------------------------------

def gradient(phi: CellField) -> MacField:
    """Centered differences onto faces.  ``phi`` must have its ghosts filled."""
    h = phi.spec.h
    return MacField(phi.spec, grad_x_array(phi.values, h), grad_y_array(phi.values, h))


def divergence(v: MacField) -> CellField:
    """Face-to-center difference ``d_x f^x + d_y f^y``.  Ghosts of the result are left at zero."""
    return _wrap_cell(v.spec, div_array(v.fx, v.fy, v.spec.h))


def laplacian(phi: CellField) -> CellField:
    """Five-point Laplacian, computed as ``divergence(gradient(phi))``."""
    return divergence(gradient(phi))


def face_average(phi: CellField) -> MacField:
    """Mean of the two cells adjacent to every face (boundary faces use ghosts)."""
    return MacField(phi.spec, avg_x_array(phi.values), avg_y_array(phi.values))


# inner products ------------------------------------------------------------

def inner_cell(phi: CellField, psi: CellField) -> float:
    _check_same(phi.spec, psi.spec)
    h = phi.spec.h
    return float(h * h * np.sum(phi.interior * psi.interior))


def inner_mac(u: MacField, v: MacField) -> float:
    """Face inner product ``[u^x, v^x]_x + [u^y, v^y]_y``."""
    _check_same(u.spec, v.spec)
    spec = u.spec
    wx, wy = face_weights(spec.nx, spec.ny)
    h2 = spec.h * spec.h
    return float(h2 * (np.sum(wx * u.fx * v.fx) + np.sum(wy * u.fy * v.fy)))


def inner_grad(phi: CellField, psi: CellField) -> float:
    return inner_mac(gradient(phi), gradient(psi))


# norms ----------------------------------------------------------------------

def norm_p(phi: CellField, p: int = 2) -> float:
    if p not in SUPPORTED_P:
        raise ValueError(f"unsupported norm exponent p={p!r}; use one of {SUPPORTED_P} or norm_inf")
    h = phi.spec.h
    return float((h * h * np.sum(np.abs(phi.interior) ** p)) ** (1.0 / p))


def norm_inf(phi: CellField) -> float:
    return float(np.max(np.abs(phi.interior)))


def mac_norm2(v: MacField) -> float:
    return float(np.sqrt(inner_mac(v, v)))


def norm_h1(phi: CellField) -> float:
    return float(np.sqrt(norm_p(phi, 2) ** 2 + inner_grad(phi, phi)))


def grad_laplacian(phi: CellField) -> MacField:
    """``grad(lap(phi))`` with Neumann ghosts re-imposed on the intermediate Laplacian."""
    lap = fill_ghosts_neumann(laplacian(phi))
    return gradient(lap)


def norm_h3(phi: CellField) -> float:
    """Discrete H^3 norm: L2 norms of phi, its gradient, Laplacian and gradient of Laplacian."""
    lap = fill_ghosts_neumann(laplacian(phi))
    total = (
        norm_p(phi, 2) ** 2
        + inner_grad(phi, phi)
        + norm_p(lap, 2) ** 2
        + inner_grad(lap, lap)
    )
    return float(np.sqrt(total))
