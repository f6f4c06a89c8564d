"""
Uniform cell-centered grid, field containers and boundary conditions.

Cell-centered fields carry one ghost ring: ``values[i, j]`` with
``i = 0..nx+1`` along x and ``j = 0..ny+1`` along y.  Interior cells are
``1..nx`` by ``1..ny`` and sit at ``((i - 1/2) h, (j - 1/2) h)``.

Face fields live on the MAC grid: ``fx[i, j]`` is the x-face at
``(i h, (j + 1/2) h)`` for ``i = 0..nx`` and ``j = 0..ny-1``; ``fy`` is the
transpose arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """
    Uniform 2D grid of square cells on ``[0, Lx] x [0, Ly]``.

    Parameters
    ----------
    Lx, Ly : float
        Domain lengths.
    nx, ny : int
        Cell counts; ``Lx / nx`` must equal ``Ly / ny``.
    """

    Lx: float
    Ly: float
    nx: int
    ny: int

    def __post_init__(self) -> None:
        if int(self.nx) != self.nx or int(self.ny) != self.ny:
            raise ValueError("cell counts must be integers")
        if self.nx < 1 or self.ny < 1:
            raise ValueError(f"cell counts must be positive, got {self.nx}x{self.ny}")
        if self.Lx <= 0 or self.Ly <= 0:
            raise ValueError("domain lengths must be positive")
        hx = self.Lx / self.nx
        hy = self.Ly / self.ny
        if not np.isclose(hx, hy, rtol=1e-12, atol=0.0):
            raise ValueError(f"cells must be square: Lx/nx={hx!r} but Ly/ny={hy!r}")

    @property
    def h(self) -> float:
        return self.Lx / self.nx

    @property
    def area(self) -> float:
        return self.Lx * self.Ly

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nx, self.ny)

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        """Interior cell-center coordinates as ``(X, Y)`` arrays of shape (nx, ny)."""
        h = self.h
        x = (np.arange(1, self.nx + 1) - 0.5) * h
        y = (np.arange(1, self.ny + 1) - 0.5) * h
        return np.meshgrid(x, y, indexing="ij")

    def coarsen(self) -> "GridSpec":
        if self.nx % 2 or self.ny % 2:
            raise ValueError(f"cannot coarsen a {self.nx}x{self.ny} grid")
        return GridSpec(self.Lx, self.Ly, self.nx // 2, self.ny // 2)

    def refine(self) -> "GridSpec":
        return GridSpec(self.Lx, self.Ly, 2 * self.nx, 2 * self.ny)


@dataclass
class CellField:
    """Cell-centered scalar with one ghost layer."""

    spec: GridSpec
    values: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        shape = (self.spec.nx + 2, self.spec.ny + 2)
        if self.values is None:
            self.values = np.zeros(shape)
        else:
            self.values = np.asarray(self.values, dtype=float)
            if self.values.shape != shape:
                raise ValueError(f"expected array of shape {shape}, got {self.values.shape}")

    @classmethod
    def from_interior(cls, spec: GridSpec, interior: np.ndarray) -> "CellField":
        """Build a field from an (nx, ny) array and fill Neumann ghosts."""
        f = cls(spec)
        f.interior[...] = interior
        return fill_ghosts_neumann(f)

    @classmethod
    def constant(cls, spec: GridSpec, c: float) -> "CellField":
        return cls(spec, np.full((spec.nx + 2, spec.ny + 2), float(c)))

    @property
    def interior(self) -> np.ndarray:
        return self.values[1:-1, 1:-1]

    def copy(self) -> "CellField":
        return CellField(self.spec, self.values.copy())


@dataclass
class MacField:
    """Face-centered vector field on the MAC grid."""

    spec: GridSpec
    fx: np.ndarray = field(default=None)  # type: ignore[assignment]
    fy: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        nx, ny = self.spec.nx, self.spec.ny
        if self.fx is None:
            self.fx = np.zeros((nx + 1, ny))
        if self.fy is None:
            self.fy = np.zeros((nx, ny + 1))
        self.fx = np.asarray(self.fx, dtype=float)
        self.fy = np.asarray(self.fy, dtype=float)
        if self.fx.shape != (nx + 1, ny) or self.fy.shape != (nx, ny + 1):
            raise ValueError(
                f"face arrays {self.fx.shape}, {self.fy.shape} do not match a {nx}x{ny} grid"
            )

    def copy(self) -> "MacField":
        return MacField(self.spec, self.fx.copy(), self.fy.copy())

    def __mul__(self, other: "MacField") -> "MacField":
        _check_same(self.spec, other.spec)
        return MacField(self.spec, self.fx * other.fx, self.fy * other.fy)

    def __add__(self, other: "MacField") -> "MacField":
        _check_same(self.spec, other.spec)
        return MacField(self.spec, self.fx + other.fx, self.fy + other.fy)

    def scaled(self, c: float) -> "MacField":
        return MacField(self.spec, c * self.fx, c * self.fy)


def _check_same(a: GridSpec, b: GridSpec) -> None:
    if a != b:
        raise ValueError(f"grid mismatch: {a} vs {b}")


def fill_ghosts_array(a: np.ndarray) -> np.ndarray:
    """Mirror the outermost interior ring of a ghosted array into its ghosts, in place."""
    a[0, 1:-1] = a[1, 1:-1]
    a[-1, 1:-1] = a[-2, 1:-1]
    a[:, 0] = a[:, 1]
    a[:, -1] = a[:, -2]
    return a


def fill_ghosts_neumann(f: CellField) -> CellField:
    """Impose homogeneous Neumann conditions by mirroring interior values into ghosts.

    The field is modified in place and returned.
    """
    fill_ghosts_array(f.values)
    return f


def zero_normal_faces(v: MacField) -> MacField:
    """Set the boundary-normal face values to zero, in place."""
    v.fx[0, :] = 0.0
    v.fx[-1, :] = 0.0
    v.fy[:, 0] = 0.0
    v.fy[:, -1] = 0.0
    return v


def project_function(g: Callable[[np.ndarray, np.ndarray], np.ndarray], spec: GridSpec) -> CellField:
    """Sample ``g(x, y)`` at interior cell centers and fill Neumann ghosts."""
    X, Y = spec.cell_centers()
    vals = np.broadcast_to(np.asarray(g(X, Y), dtype=float), X.shape)
    return CellField.from_interior(spec, vals)
