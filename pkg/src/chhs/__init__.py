"""Second-order energy-stable finite differences for the Cahn-Hilliard-Hele-Shaw system."""

from .diagnostics import DiagnosticsRecord, energy_Eh, energy_Fh, mass
from .fas_solver import MgConfig, SolverDivergence, solve
from .grid import CellField, GridSpec, MacField
from .harness import RunConfig, cauchy_convergence, parse_config, run_simulation
from .scheme import SchemeParams
from .stepping import TimeState, advance_step, bootstrap_first_step

__all__ = [
    "CellField", "DiagnosticsRecord", "GridSpec", "MacField", "MgConfig", "RunConfig",
    "SchemeParams", "SolverDivergence", "TimeState", "advance_step", "bootstrap_first_step",
    "cauchy_convergence", "energy_Eh", "energy_Fh", "mass", "parse_config", "run_simulation",
    "solve",
]

__version__ = "0.1.0"
