"""
Energies, mass, the per-step dissipation balance and related run diagnostics.

All quantities use the grid inner products from :mod:`chhs.operators`, so
they inherit the exact summation-by-parts structure that makes the
dissipation balance hold to solver tolerance.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass

import numpy as np

from .grid import CellField, MacField, _check_same
from .operators import div_array, grad_laplacian, inner_grad, inner_mac, norm_p
from .scheme import SchemeParams

CSV_COLUMNS = (
    "step", "t", "E_h", "F_h", "mass", "grad_mu_sq", "u_sq",
    "dissipation_defect", "h3_sum", "div_u_inf", "vcycles",
)


@dataclass
class DiagnosticsRecord:
    """One row of the run time series.

    ``h3_sum`` is the running value of ``s * sum ||grad lap phi^m||^2``;
    the increment of the current step is kept separately in
    ``h3_increment`` and is not written to disk, nor is ``div_u_l2``.
    """

    step: int
    t: float
    E_h: float
    F_h: float
    mass: float
    grad_mu_sq: float
    u_sq: float
    dissipation_defect: float
    h3_sum: float
    div_u_inf: float
    vcycles: int
    h3_increment: float = 0.0
    div_u_l2: float = 0.0

    def csv_values(self) -> tuple:
        return astuple(self)[: len(CSV_COLUMNS)]


def energy_Eh(phi: CellField, params: SchemeParams) -> float:
    """Discrete Ginzburg-Landau energy ``|phi|_4^4/4 - |phi|_2^2/2 + eps^2/2 |grad phi|^2``."""
    quartic = norm_p(phi, 4) ** 4
    quadratic = norm_p(phi, 2) ** 2
    return float(0.25 * quartic - 0.5 * quadratic + 0.5 * params.epsilon ** 2 * inner_grad(phi, phi))


def energy_Fh(phi: CellField, psi: CellField, params: SchemeParams) -> float:
    """Two-level energy: ``E_h(phi)`` plus the quadratic terms in ``phi - psi``."""
    _check_same(phi.spec, psi.spec)
    diff = CellField(phi.spec, phi.values - psi.values)
    return float(
        energy_Eh(phi, params)
        + 0.25 * norm_p(diff, 2) ** 2
        + 0.125 * params.epsilon ** 2 * inner_grad(diff, diff)
    )


def mass(phi: CellField) -> float:
    h = phi.spec.h
    return float(h * h * np.sum(phi.interior))


def dissipation_terms(mu: CellField, u: MacField, params: SchemeParams) -> tuple[float, float]:
    """``(||grad mu||^2, ||u||^2)`` as used in the dissipation balance."""
    return inner_grad(mu, mu), inner_mac(u, u)


def dissipation_ledger(F_prev: float, F_new: float, grad_mu_sq: float, u_sq: float,
                       params: SchemeParams) -> float:
    """
    Left side of the one-step energy balance; non-positive for an exact solve.

    ``F_new - F_prev + s |grad mu|^2 + (s / gamma) |u|^2``.  The velocity
    term is dropped when ``gamma == 0``.
    """
    s = params.dt
    defect = F_new - F_prev + s * grad_mu_sq
    if params.gamma > 0:
        defect += s / params.gamma * u_sq
    return float(defect)


def h3_increment(phi: CellField, params: SchemeParams) -> float:
    """``s * ||grad lap phi||^2`` for one time level."""
    g = grad_laplacian(phi)
    return float(params.dt * inner_mac(g, g))


class H3Accumulator:
    """Running sum of :func:`h3_increment` over the time levels of a run."""

    def __init__(self) -> None:
        self.total = 0.0
        self.count = 0

    def add(self, phi: CellField, params: SchemeParams) -> float:
        inc = h3_increment(phi, params)
        self.total += inc
        self.count += 1
        return inc


def h3_accumulator(phis, params: SchemeParams) -> float:
    """Sum of ``s ||grad lap phi^m||^2`` over an iterable of fields."""
    acc = H3Accumulator()
    for phi in phis:
        acc.add(phi, params)
    return acc.total


def divergence_residual(u: MacField) -> tuple[float, float]:
    """``(l2, max)`` norms of the discrete divergence of a face field."""
    d = div_array(u.fx, u.fy, u.spec.h)
    h = u.spec.h
    return float(np.sqrt(h * h * np.sum(d * d))), float(np.max(np.abs(d)))
