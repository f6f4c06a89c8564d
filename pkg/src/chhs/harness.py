"""
Configuration, initial data, experiment drivers and on-disk formats.

A run configuration is a small ``key = value`` file with ``#`` comments and
an optional ``[mg]`` section for the multigrid settings::

    preset = spinodal
    nx = 128
    gamma = 2
    [mg]
    max_cycles = 80
"""

from __future__ import annotations

import configparser
import csv
import dataclasses
import logging
import math
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from .diagnostics import (
    CSV_COLUMNS,
    DiagnosticsRecord,
    H3Accumulator,
    dissipation_ledger,
    dissipation_terms,
    divergence_residual,
    energy_Eh,
    energy_Fh,
    mass,
)
from .fas_solver import MgConfig, check_multigrid_size
from .grid import CellField, GridSpec, MacField, fill_ghosts_array, project_function
from .scheme import SchemeParams
from .stepping import TimeState, advance_step, bootstrap_first_step, state_from_exact

log = logging.getLogger(__name__)

INIT_KINDS = ("benchmark", "spinodal")
BOOTSTRAPS = ("first_order", "project_exact")
SNAPSHOT_MAGIC = "CHHS-FIELD"


class ConfigError(ValueError):
    """Invalid or unreadable run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce one simulation.

    Exactly one of ``dt`` and ``dt_ratio`` is set; with ``dt_ratio`` the
    step is ``dt_ratio * h``, which keeps ``s / h`` fixed under refinement.
    """

    Lx: float
    Ly: float
    nx: int
    ny: int
    epsilon: float
    gamma: float
    T_final: float
    dt: Optional[float] = None
    dt_ratio: Optional[float] = None
    init: str = "benchmark"
    phi_bar: float = -0.05
    noise_amp: float = 0.05
    rng_seed: int = 0
    output_dir: str = "output"
    output_every: int = 0
    bootstrap: str = "first_order"
    mg: MgConfig = field(default_factory=MgConfig)
    base_dir: str = "."

    @property
    def spec(self) -> GridSpec:
        return GridSpec(self.Lx, self.Ly, self.nx, self.ny)

    @property
    def step_size(self) -> float:
        if self.dt is not None:
            return self.dt
        return self.dt_ratio * self.spec.h

    @property
    def params(self) -> SchemeParams:
        return SchemeParams(self.epsilon, self.gamma, self.step_size)

    @property
    def n_steps(self) -> int:
        return int(round(self.T_final / self.step_size))

    def refined(self, factor: int) -> "RunConfig":
        """Same physical problem on a grid ``factor`` times finer in each direction."""
        return replace(self, nx=self.nx * factor, ny=self.ny * factor)


PRESETS: dict[str, dict] = {
    "benchmark": dict(Lx=3.2, Ly=3.2, nx=32, ny=32, epsilon=0.2, gamma=2.0, dt_ratio=0.05,
                      T_final=0.8, init="benchmark"),
    "spinodal": dict(Lx=6.4, Ly=6.4, nx=128, ny=128, epsilon=0.03, gamma=2.0, dt=0.01,
                     T_final=5.0, init="spinodal", phi_bar=-0.05, noise_amp=0.05,
                     rng_seed=20151, output_every=50),
}

_FLOAT_KEYS = {"Lx", "Ly", "epsilon", "gamma", "T_final", "dt", "dt_ratio", "phi_bar", "noise_amp"}
_INT_KEYS = {"nx", "ny", "rng_seed", "output_every"}
_STR_KEYS = {"init", "output_dir", "bootstrap"}
_RUN_KEYS = _FLOAT_KEYS | _INT_KEYS | _STR_KEYS | {"preset"}
_MG_KEYS = {f.name: f.type for f in dataclasses.fields(MgConfig)}
_TOP = "run"


def _convert(key: str, raw: str, kind, lineinfo: str):
    try:
        if kind in (int, "int"):
            val = float(raw)
            if val != int(val):
                raise ValueError
            return int(val)
        return float(raw)
    except ValueError:
        raise ConfigError(f"{lineinfo}: {key} = {raw!r} is not a valid {'integer' if kind in (int, 'int') else 'number'}")


def parse_config_text(text: str, source: str = "<config>", base_dir: str = ".") -> RunConfig:
    """Parse configuration text; see :func:`parse_config`."""
    parser = configparser.ConfigParser(
        strict=True, interpolation=None, comment_prefixes=("#",), inline_comment_prefixes=("#",),
        empty_lines_in_values=False,
    )
    parser.optionxform = str  # keys are case-sensitive (Lx vs lx)
    try:
        # the synthetic header shifts reported line numbers by one
        parser.read_string(f"[{_TOP}]\n" + text, source=source)
    except configparser.DuplicateOptionError as exc:
        raise ConfigError(f"{source}, line {exc.lineno - 1}: duplicate key {exc.option!r}") from None
    except configparser.DuplicateSectionError as exc:
        raise ConfigError(f"{source}, line {exc.lineno - 1}: duplicate section [{exc.section}]") from None
    except configparser.ParsingError as exc:
        lineno, line = exc.errors[0]
        raise ConfigError(f"{source}, line {lineno - 1}: cannot parse {line.strip()!r}") from None
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from None

    problems: list[str] = []
    for section in parser.sections():
        if section not in (_TOP, "mg"):
            problems.append(f"unknown section [{section}]")
    run = parser[_TOP]
    for key in run:
        if key not in _RUN_KEYS:
            problems.append(f"unknown key {key!r}")
    mg_raw = parser["mg"] if parser.has_section("mg") else {}
    for key in mg_raw:
        if key not in _MG_KEYS:
            problems.append(f"unknown key {key!r} in [mg]")
    if problems:
        raise ConfigError(f"{source}: " + "; ".join(problems))

    values: dict = {}
    preset = run.get("preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigError(f"{source}: unknown preset {preset!r}; choose from {sorted(PRESETS)}")
        values.update(PRESETS[preset])
    for key, raw in run.items():
        if key == "preset":
            continue
        if key in _FLOAT_KEYS:
            values[key] = _convert(key, raw, float, source)
        elif key in _INT_KEYS:
            values[key] = _convert(key, raw, int, source)
        else:
            values[key] = raw
    if "dt" in run and "dt_ratio" not in run:
        values.pop("dt_ratio", None)
    if "dt_ratio" in run and "dt" not in run:
        values.pop("dt", None)

    mg_values = {k: _convert(k, v, "int" if _MG_KEYS[k] in (int, "int") else float, source)
                 for k, v in mg_raw.items()}
    try:
        values["mg"] = MgConfig(**mg_values)
    except ValueError as exc:
        raise ConfigError(f"{source}: [mg] {exc}") from None

    # geometry defaults: square domain, cell count following the aspect ratio
    if "Lx" in run and "Ly" not in run:
        values["Ly"] = values["Lx"]
    if "nx" in run and "ny" not in run and "Lx" in values and "Ly" in values:
        values["ny"] = int(round(values["nx"] * values["Ly"] / values["Lx"]))

    required = ("Lx", "Ly", "nx", "ny", "epsilon", "gamma", "T_final")
    missing = [k for k in required if k not in values]
    if "dt" not in values and "dt_ratio" not in values:
        missing.append("dt or dt_ratio")
    if missing:
        raise ConfigError(f"{source}: missing {', '.join(missing)} (or use a preset)")
    values["base_dir"] = base_dir
    cfg = RunConfig(**values)
    validate_config(cfg, source)
    return cfg


def validate_config(cfg: RunConfig, source: str = "<config>") -> None:
    problems = []
    if cfg.dt is not None and cfg.dt_ratio is not None:
        problems.append("set only one of dt and dt_ratio")
    try:
        spec = cfg.spec
    except ValueError as exc:
        problems.append(str(exc))
        spec = None
    if spec is not None:
        try:
            check_multigrid_size(spec, cfg.mg.coarsest)
        except ValueError as exc:
            problems.append(str(exc))
    for name, ok in (
        ("epsilon must be positive", cfg.epsilon > 0),
        ("gamma must be non-negative", cfg.gamma >= 0),
        ("T_final must be non-negative", cfg.T_final >= 0),
        ("noise_amp must be non-negative", cfg.noise_amp >= 0),
        ("output_every must be non-negative", cfg.output_every >= 0),
        ("dt must be positive", cfg.dt is None or cfg.dt > 0),
        ("dt_ratio must be positive", cfg.dt_ratio is None or cfg.dt_ratio > 0),
    ):
        if not ok:
            problems.append(name)
    if cfg.bootstrap not in BOOTSTRAPS:
        problems.append(f"bootstrap must be one of {BOOTSTRAPS}, got {cfg.bootstrap!r}")
    if cfg.init not in INIT_KINDS and not cfg.init.startswith("file:"):
        problems.append(f"init must be benchmark, spinodal or file:<path>, got {cfg.init!r}")
    if not problems and cfg.T_final > 0:
        steps = cfg.T_final / cfg.step_size
        if abs(steps - round(steps)) > 1e-8 * max(1.0, steps):
            problems.append(f"T_final = {cfg.T_final!r} is not a whole number of steps of size {cfg.step_size!r}")
    if problems:
        raise ConfigError(f"{source}: " + "; ".join(problems))


def parse_config(path) -> RunConfig:
    """
    Read and validate a run configuration file.

    Raises :class:`ConfigError` naming the file (and line, for syntax
    problems) on unknown or duplicate keys, bad values, non-square cells or
    grids that do not coarsen to the multigrid's coarsest size.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from None
    return parse_config_text(text, source=str(path), base_dir=str(path.parent))


# initial data ---------------------------------------------------------------

def init_benchmark(spec: GridSpec) -> CellField:
    """Smooth two-bump field on the box, sampled at cell centers."""
    Lx, Ly = spec.Lx, spec.Ly
    return project_function(
        lambda x, y: 0.5 * (1.0 - np.cos(4.0 * np.pi * x / Lx)) * (1.0 - np.cos(2.0 * np.pi * y / Ly)) - 1.0,
        spec,
    )


def init_spinodal(spec: GridSpec, phi_bar: float, amp: float, seed: int) -> CellField:
    """
    ``phi_bar + amp (2 r - 1)`` with ``r`` uniform on [0, 1).

    ``r`` comes from numpy's PCG64 bit generator seeded with ``seed``, drawn
    in C order over the (nx, ny) interior, so a given seed gives the same
    field on every platform.
    """
    if amp < 0:
        raise ValueError("noise amplitude must be non-negative")
    rng = np.random.Generator(np.random.PCG64(seed))
    r = rng.random((spec.nx, spec.ny))
    return CellField.from_interior(spec, phi_bar + amp * (2.0 * r - 1.0))


def initial_field(cfg: RunConfig) -> CellField:
    spec = cfg.spec
    if cfg.init == "benchmark":
        return init_benchmark(spec)
    if cfg.init == "spinodal":
        return init_spinodal(spec, cfg.phi_bar, cfg.noise_amp, cfg.rng_seed)
    path = Path(cfg.init[len("file:"):])
    if not path.is_absolute():
        path = Path(cfg.base_dir) / path
    phi, _ = read_snapshot(path)
    if phi.spec.shape != spec.shape or not math.isclose(phi.spec.h, spec.h, rel_tol=1e-12):
        raise ConfigError(f"{path}: field is {phi.spec.nx}x{phi.spec.ny} with h={phi.spec.h!r}, "
                          f"config expects {spec.nx}x{spec.ny} with h={spec.h!r}")
    return CellField(spec, phi.values)


# persistence -------------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return "%.17g" % x


class TimeSeriesWriter:
    """Streams :class:`DiagnosticsRecord` rows to ``energy.csv``."""

    def __init__(self, path):
        self.path = Path(path)
        try:
            self._fh = open(self.path, "w", newline="")
        except OSError as exc:
            raise OSError(exc.errno, f"cannot write time series: {exc.strerror}", str(self.path)) from None
        self._writer = csv.writer(self._fh, lineterminator="\n")
        self._writer.writerow(CSV_COLUMNS)

    def write(self, rec: DiagnosticsRecord) -> None:
        self._writer.writerow([_fmt(v) for v in rec.csv_values()])

    def close(self) -> None:
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def write_timeseries(records: Sequence[DiagnosticsRecord], path) -> Path:
    with TimeSeriesWriter(path) as w:
        for rec in records:
            w.write(rec)
    return Path(path)


def read_timeseries(path) -> dict[str, np.ndarray]:
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return {name: data[:, k] for k, name in enumerate(CSV_COLUMNS)}


def write_snapshot(phi: CellField, t: float, path) -> Path:
    """Header ``CHHS-FIELD nx ny h t``, then one line per grid row ``j`` holding ``phi[i, j]`` for all ``i``."""
    spec = phi.spec
    path = Path(path)
    header = f"{SNAPSHOT_MAGIC} {spec.nx} {spec.ny} {spec.h!r} {float(t)!r}"
    try:
        np.savetxt(path, phi.interior.T, fmt="%.17g", header=header, comments="")
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write snapshot: {exc.strerror}", str(path)) from None
    return path


def read_snapshot(path) -> tuple[CellField, float]:
    path = Path(path)
    try:
        with open(path) as fh:
            head = fh.readline().split()
            if len(head) != 5 or head[0] != SNAPSHOT_MAGIC:
                raise ConfigError(f"{path}: not a {SNAPSHOT_MAGIC} file")
            nx, ny = int(head[1]), int(head[2])
            h, t = float(head[3]), float(head[4])
            rows = np.loadtxt(fh, ndmin=2)
    except OSError as exc:
        raise ConfigError(f"cannot read field file {path}: {exc.strerror or exc}") from None
    if rows.shape != (ny, nx):
        raise ConfigError(f"{path}: expected {ny} rows of {nx} values, found shape {rows.shape}")
    spec = GridSpec(nx * h, ny * h, nx, ny)
    return CellField.from_interior(spec, rows.T), t


# running ---------------------------------------------------------------------

@dataclass
class RunResult:
    state: TimeState
    records: list[DiagnosticsRecord]
    phi0: CellField
    wall_time: float

    @property
    def total_cycles(self) -> int:
        return int(sum(r.vcycles for r in self.records[1:]))

    @property
    def mean_cycles(self) -> float:
        solved = self.records[1:]
        return float(np.mean([r.vcycles for r in solved])) if solved else 0.0


def _initial_record(phi0: CellField, params: SchemeParams, acc: H3Accumulator) -> DiagnosticsRecord:
    E = energy_Eh(phi0, params)
    acc.add(phi0, params)
    return DiagnosticsRecord(0, 0.0, E, E, mass(phi0), 0.0, 0.0, 0.0, acc.total, 0.0, 0,
                             h3_increment=acc.total)


def _step_record(state: TimeState, params: SchemeParams, F_prev: float, acc: H3Accumulator,
                 first_order: bool, E_prev: float) -> DiagnosticsRecord:
    phi = state.phi_m
    E = energy_Eh(phi, params)
    F = energy_Fh(phi, state.phi_mm1, params)
    grad_mu_sq, u_sq = dissipation_terms(state.mu, state.u, params)
    if first_order:
        # the start-up step is stable with respect to E_h rather than F_h
        defect = dissipation_ledger(E_prev, E, grad_mu_sq, u_sq, params)
    else:
        defect = dissipation_ledger(F_prev, F, grad_mu_sq, u_sq, params)
    inc = acc.add(phi, params)
    div_l2, div_inf = divergence_residual(state.u)
    cycles = state.last_solve.cycles if state.last_solve is not None else 0
    return DiagnosticsRecord(state.step, state.time, E, F, mass(phi), grad_mu_sq, u_sq, defect,
                             acc.total, div_inf, cycles, h3_increment=inc, div_u_l2=div_l2)


def iterate_run(cfg: RunConfig, phi0: Optional[CellField] = None,
                exact: Optional[Callable[[np.ndarray, np.ndarray, float], np.ndarray]] = None,
                ) -> Iterator[tuple[TimeState | None, DiagnosticsRecord]]:
    """
    Yield ``(state, record)`` for the initial level and after every step.

    The first item carries ``state = None``.  ``exact(x, y, t)`` is needed
    only for ``bootstrap = project_exact``.
    """
    params = cfg.params
    if phi0 is None:
        phi0 = initial_field(cfg)
    acc = H3Accumulator()
    rec = _initial_record(phi0, params, acc)
    yield None, rec
    n = cfg.n_steps
    if n == 0:
        return
    if cfg.bootstrap == "first_order":
        state = bootstrap_first_step(phi0, params, cfg.mg)
    else:
        if exact is None:
            raise ConfigError("bootstrap = project_exact needs an exact solution; none is known for this init")
        phi1 = project_function(lambda x, y: exact(x, y, params.dt), cfg.spec)
        state = state_from_exact(phi0, phi1, params)
    rec = _step_record(state, params, rec.F_h, acc, first_order=True, E_prev=rec.E_h)
    yield state, rec
    for _ in range(n - 1):
        state = advance_step(state, params, cfg.mg)
        rec = _step_record(state, params, rec.F_h, acc, first_order=False, E_prev=rec.E_h)
        yield state, rec


def run_simulation(cfg: RunConfig, output_dir=None, write: bool = True,
                   phi0: Optional[CellField] = None, progress: bool = False) -> RunResult:
    """
    Bootstrap, step to ``T_final`` and return the final state and all records.

    With ``write`` the time series goes to ``<output_dir>/energy.csv`` (one
    row per step, flushed as it goes) and, if ``output_every > 0``, the phase
    field to ``phi_<step>.dat`` every ``output_every`` steps including step 0.
    Solver failures propagate as :class:`~chhs.fas_solver.SolverDivergence`
    after the rows written so far are flushed.
    """
    out = Path(output_dir if output_dir is not None else cfg.output_dir)
    if not out.is_absolute() and output_dir is None:
        out = Path(cfg.base_dir) / out
    if phi0 is None:
        phi0 = initial_field(cfg)
    writer = None
    if write:
        try:
            out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise OSError(exc.errno, f"cannot create output directory: {exc.strerror}", str(out)) from None
        writer = TimeSeriesWriter(out / "energy.csv")
    records: list[DiagnosticsRecord] = []
    state = None
    t0 = time.perf_counter()
    try:
        for st, rec in iterate_run(cfg, phi0):
            if st is not None:
                state = st
            records.append(rec)
            if writer is not None:
                writer.write(rec)
                if cfg.output_every and rec.step % cfg.output_every == 0:
                    field_now = phi0 if st is None else st.phi_m
                    write_snapshot(field_now, rec.t, out / f"phi_{rec.step}.dat")
            if progress and rec.step and (rec.step % max(1, cfg.n_steps // 20) == 0):
                log.info("step %d/%d  t=%.4g  F_h=%.10g  cycles=%d", rec.step, cfg.n_steps, rec.t,
                         rec.F_h, rec.vcycles)
    finally:
        if writer is not None:
            writer.close()
    if state is None:
        state = TimeState(phi0.copy(), phi0.copy(), CellField(phi0.spec), CellField(phi0.spec),
                          MacField(phi0.spec), step=0, time=0.0)
    return RunResult(state, records, phi0, time.perf_counter() - t0)


# convergence study ----------------------------------------------------------------

INTERPOLATIONS = ("bilinear", "nearest")


def interpolate_nearest(coarse: CellField) -> np.ndarray:
    """Coarse interior copied into each 2x2 fine block; returns the fine interior."""
    c = coarse.interior
    return np.repeat(np.repeat(c, 2, axis=0), 2, axis=1)


def interpolate_bilinear(coarse: CellField) -> np.ndarray:
    """
    Bilinear coarse-to-fine map for cell-centered data with mirrored ghosts.

    Each fine cell center lies a quarter coarse cell from the nearest
    coarse center in each direction, giving weights 9/16, 3/16, 3/16, 1/16.
    """
    c = fill_ghosts_array(coarse.values.copy())
    nx, ny = coarse.spec.nx, coarse.spec.ny

    def along_x(a):
        out = np.empty((2 * nx, a.shape[1]))
        out[0::2] = 0.75 * a[1:-1] + 0.25 * a[:-2]
        out[1::2] = 0.75 * a[1:-1] + 0.25 * a[2:]
        return out

    tx = along_x(c)  # (2nx, ny+2)
    fine = np.empty((2 * nx, 2 * ny))
    fine[:, 0::2] = 0.75 * tx[:, 1:-1] + 0.25 * tx[:, :-2]
    fine[:, 1::2] = 0.75 * tx[:, 1:-1] + 0.25 * tx[:, 2:]
    return fine


def cauchy_difference(fine: CellField, coarse: CellField, interpolation: str = "bilinear") -> float:
    """Discrete L2 norm of ``fine - I(coarse)`` on the fine grid."""
    if interpolation not in INTERPOLATIONS:
        raise ValueError(f"interpolation must be one of {INTERPOLATIONS}")
    if fine.spec != coarse.spec.refine():
        raise ValueError(f"{fine.spec} is not the refinement of {coarse.spec}")
    interp = interpolate_bilinear if interpolation == "bilinear" else interpolate_nearest
    d = fine.interior - interp(coarse)
    h = fine.spec.h
    return float(np.sqrt(h * h * np.sum(d * d)))


@dataclass
class ConvergenceRow:
    nx: int
    h: float
    error: Optional[float]
    rate: Optional[float]
    mean_cycles: float
    time_per_step: float

    @property
    def spec_label(self) -> str:
        return f"L/{self.nx}"


@dataclass
class ConvergenceTable:
    rows: list[ConvergenceRow]
    interpolation: str
    runs: list[RunResult] = field(default_factory=list, repr=False)

    @property
    def errors(self) -> list[float]:
        return [r.error for r in self.rows if r.error is not None]

    @property
    def rates(self) -> list[float]:
        return [r.rate for r in self.rows if r.rate is not None]

    def format(self) -> str:
        lines = [f"Cauchy differences ({self.interpolation} interpolation)",
                 f"{'h_c':>10} {'h_f':>10} {'error':>12} {'rate':>6} {'#V':>6} {'s/step':>9}"]
        for prev, row in zip(self.rows, self.rows[1:]):
            rate = f"{row.rate:6.2f}" if row.rate is not None else f"{'-':>6}"
            lines.append(f"{prev.spec_label:>10} {row.spec_label:>10} {row.error:12.4e} {rate} "
                         f"{row.mean_cycles:6.2f} {row.time_per_step:9.4f}")
        return "\n".join(lines)


def cauchy_convergence(cfg: RunConfig, levels: int, interpolation: str = "bilinear",
                       progress: bool = False) -> ConvergenceTable:
    """
    Run the configuration on ``levels`` successively doubled grids and compare neighbours.

    Starts from ``cfg.nx``; each run goes to ``T_final`` with its own step
    (use ``dt_ratio`` so that ``s`` follows ``h``).  Row ``k > 0`` holds the
    Cauchy difference between grids ``k - 1`` and ``k`` and, from ``k = 2``,
    the rate ``log2(e_{k-1} / e_k)``.  Mean V-cycles and time per step refer
    to the finer grid of each row.
    """
    if levels < 2:
        raise ValueError("a convergence study needs at least two grids")
    if interpolation not in INTERPOLATIONS:
        raise ValueError(f"interpolation must be one of {INTERPOLATIONS}")
    rows: list[ConvergenceRow] = []
    runs: list[RunResult] = []
    prev_phi = None
    for k in range(levels):
        c = cfg.refined(2 ** k)
        validate_config(c)
        res = run_simulation(c, write=False)
        n = max(1, c.n_steps)
        err = rate = None
        if prev_phi is not None:
            err = cauchy_difference(res.state.phi_m, prev_phi, interpolation)
            if rows[-1].error is not None and err > 0:
                rate = math.log2(rows[-1].error / err)
        rows.append(ConvergenceRow(c.nx, c.spec.h, err, rate, res.mean_cycles, res.wall_time / n))
        if progress:
            log.info("nx=%d done: %d steps, mean %.2f V-cycles, %.1fs", c.nx, c.n_steps,
                     res.mean_cycles, res.wall_time)
        prev_phi = res.state.phi_m
        runs.append(res)
    return ConvergenceTable(rows, interpolation, runs)
