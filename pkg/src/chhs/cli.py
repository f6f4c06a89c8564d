"""Command-line entry point: ``chhs run``, ``chhs converge`` and ``chhs spinodal``."""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

from .fas_solver import SmootherFailure, SolverDivergence
from .harness import (
    INTERPOLATIONS,
    ConfigError,
    cauchy_convergence,
    parse_config,
    run_simulation,
    validate_config,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_SOLVER = 2

log = logging.getLogger("chhs")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chhs", description="Cahn-Hilliard-Hele-Shaw simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="time-step one configuration and write diagnostics")
    run.add_argument("config")
    run.add_argument("--output-dir", help="override output_dir from the config")
    run.add_argument("--quiet", action="store_true", help="only report errors")

    conv = sub.add_parser("converge", help="Cauchy convergence study over doubled grids")
    conv.add_argument("config")
    conv.add_argument("--levels", type=int, required=True,
                      help="number of grids, starting from the config's nx and doubling")
    conv.add_argument("--interp", choices=INTERPOLATIONS, default="bilinear",
                      help="coarse-to-fine interpolation for the Cauchy difference")
    conv.add_argument("--quiet", action="store_true")

    spin = sub.add_parser("spinodal", help="run a configuration with the flow coupling overridden")
    spin.add_argument("config")
    spin.add_argument("--gamma", type=float, required=True)
    spin.add_argument("--output-dir")
    spin.add_argument("--quiet", action="store_true")
    return parser


def _run(cfg, output_dir, quiet: bool) -> int:
    result = run_simulation(cfg, output_dir=output_dir, progress=not quiet)
    last = result.records[-1]
    if not quiet:
        print(f"finished {last.step} steps to t={last.t:.6g}: F_h={last.F_h:.12g} "
              f"mass={last.mass:.12g} mean V-cycles={result.mean_cycles:.2f} "
              f"({result.wall_time:.1f}s)")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = parse_config(args.config)
        if args.command == "run":
            return _run(cfg, args.output_dir, args.quiet)
        if args.command == "spinodal":
            if cfg.init != "spinodal":
                log.warning("config init is %r, not spinodal data", cfg.init)
            cfg = dataclasses.replace(cfg, gamma=args.gamma)
            validate_config(cfg, args.config)
            out = args.output_dir
            if out is None:
                out = Path(cfg.base_dir) / cfg.output_dir / f"gamma_{args.gamma:g}"
            return _run(cfg, out, args.quiet)
        table = cauchy_convergence(cfg, args.levels, args.interp, progress=not args.quiet)
        print(table.format())
        return EXIT_OK
    except (SolverDivergence, SmootherFailure) as exc:
        print(f"chhs: solver did not converge: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (ConfigError, ValueError) as exc:
        print(f"chhs: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"chhs: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
