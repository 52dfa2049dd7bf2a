"""Command-line entry point: parameter sweeps to deterministic CSV files.

Exit codes: 0 success, 2 configuration or input validation, 3 numerical
failure (partial sweep results are flushed before exiting).  Errors print a
single machine-parsable line `error kind=<Type> message="..."` on stdout;
`--progress` chatter goes to stderr only.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

import numpy as np

from . import bethe, csvio, lmg, thermo
from .config import RunConfig, parse_config
from .density import fidelity, susceptibility_from_fidelity
from .errors import (
    ConfigurationError,
    NumericFailureError,
    PartialResultError,
    PrecisionLimitError,
    ValidationError,
)

CONFIG_ERRORS = (ConfigurationError, ValidationError, PrecisionLimitError, OSError)
NUMERIC_ERRORS = (NumericFailureError, PartialResultError)


def _progress(enabled: bool, message: str) -> None:
    if enabled:
        print(message, file=sys.stderr, flush=True)


def _emit(path: str, header, rows) -> None:
    count = csvio.write_csv(path, header, rows)
    print(f"wrote {path} ({count} rows)")


def _run_lmg(config: RunConfig, progress: bool) -> None:
    _progress(progress, f"lmg sweep: S={config.S} gamma={config.gamma} h in [{config.h_min}, {config.h_max}]")
    grid, densities, curve = lmg.lmg_sweep_with_densities(
        config.S, config.gamma, config.h_min, config.h_max, config.dh, config.lambda_c
    )
    density_rows = (
        (h, label, weight)
        for h, dist in zip(grid, densities)
        for label, weight in zip(dist.labels, dist.weights)
    )
    _emit(os.path.join(config.output_dir, "lmg_density.csv"), ["h", "s_z", "n"], density_rows)
    dff_rows = ((r.param, r.F, r.chi_eq5, r.chi_eq6) for r in curve.records)
    _emit(os.path.join(config.output_dir, "lmg_dff.csv"), ["h", "F", "chi_eq5", "chi_eq6"], dff_rows)


def _hubbard_files(out_dir: str, sweep: list, config: RunConfig) -> None:
    root_rows = []
    dos_rows = []
    for roots in sweep:
        U = roots.params.U
        for j, value in enumerate(roots.k, start=1):
            root_rows.append((U, "k", j, value))
        for a, value in enumerate(roots.lam, start=1):
            root_rows.append((U, "lambda", a, value))
        dos = bethe.density_of_state(roots)
        dos_rows.extend((U, km, rho) for km, rho in zip(dos.k_mid, dos.rho))
    _emit(os.path.join(out_dir, "hubbard_roots.csv"), ["U", "kind", "index", "value"], root_rows)
    _emit(os.path.join(out_dir, "hubbard_dos.csv"), ["U", "k_mid", "rho"], dos_rows)
    if len(sweep) >= 2:
        curve = bethe.hubbard_dff_from_roots(sweep, config.B, include_eq6=config.include_eq6)
        if config.include_eq6:
            header = ["U", "F", "chi_eq5", "chi_eq6"]
            rows = [(r.param, r.F, r.chi_eq5, r.chi_eq6) for r in curve.records]
        else:
            header = ["U", "F", "chi_eq5"]
            rows = [(r.param, r.F, r.chi_eq5) for r in curve.records]
        _emit(os.path.join(out_dir, "hubbard_dff.csv"), header, rows)


def _run_hubbard(config: RunConfig, progress: bool) -> None:
    _progress(
        progress,
        f"hubbard continuation: L={config.L} N={config.N} M={config.M} "
        f"U {config.U_start} -> {config.U_end} step {config.dU}",
    )
    try:
        sweep = bethe.continuation_sweep(
            config.L,
            config.N,
            config.M,
            config.U_start,
            config.U_end,
            config.dU,
            tol=config.newton_tol,
            max_iter=config.max_iter,
        )
    except PartialResultError as exc:
        _progress(progress, f"sweep failed at U={exc.failed_at}; flushing {len(exc.converged)} converged points")
        _hubbard_files(config.output_dir, exc.converged, config)
        raise
    _progress(progress, f"{len(sweep)} solves converged; writing output")
    _hubbard_files(config.output_dir, sweep, config)


def _run_thermo(config: RunConfig, progress: bool) -> None:
    grid = np.linspace(config.k_min, config.k_max, config.k_count)
    rows = []
    for U in config.U_values:
        _progress(progress, f"thermodynamic dos: U={U}, {config.k_count} k points")
        for k in grid:
            rows.append((U, float(k), thermo.thermodynamic_dos(U, float(k), config.quad_tol)))
    _emit(os.path.join(config.output_dir, "thermo_dos.csv"), ["U", "k", "rho"], rows)


def _run_fidelity(config: RunConfig) -> None:
    a = csvio.read_density_csv(config.a_csv, config.at_a)
    b = csvio.read_density_csv(config.b_csv, config.at_b)
    F = fidelity(a, b)
    print(f"F = {csvio.format_value(F)}")
    print(f"chi_eq5 = {csvio.format_value(susceptibility_from_fidelity(F, config.delta))}")


def run(config: RunConfig, progress: bool = False) -> None:
    """Executes one validated config; writes CSVs and a summary to stdout."""
    if config.model != "fidelity":
        os.makedirs(config.output_dir, exist_ok=True)
    if config.model == "lmg":
        _run_lmg(config, progress)
    elif config.model == "hubbard":
        _run_hubbard(config, progress)
    elif config.model == "thermo-dos":
        _run_thermo(config, progress)
    elif config.model == "fidelity":
        _run_fidelity(config)
    else:  # pragma: no cover - parse_config only admits the four models
        raise ConfigurationError(f"unknown model {config.model!r}")


def _load_config(path: str) -> RunConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def _error_line(exc: Exception) -> str:
    detail = str(exc).replace('"', "'")
    suffix = ""
    if isinstance(exc, PartialResultError):
        suffix = f" param={csvio.format_value(exc.failed_at)}"
    return f'error kind={type(exc).__name__}{suffix} message="{detail}"'


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="dfflab",
        description="Ground-state density fidelity sweeps for lattice models",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("lmg", "hubbard", "thermo-dos"):
        p = sub.add_parser(name, help=f"run a {name} sweep from a config file")
        p.add_argument("--config", required=True, help="path to a key=value config document")
        p.add_argument("--progress", action="store_true", help="progress chatter on stderr")
    p_fid = sub.add_parser("fidelity", help="fidelity between two density CSV files")
    p_fid.add_argument("a_csv")
    p_fid.add_argument("b_csv")
    p_fid.add_argument("--delta", type=float, required=True, help="parameter distance for the susceptibility")
    p_fid.add_argument("--at-a", type=float, default=None, help="parameter slice for a 3-column first file")
    p_fid.add_argument("--at-b", type=float, default=None, help="parameter slice for a 3-column second file")
    args = parser.parse_args(argv)

    try:
        if args.command == "fidelity":
            config = RunConfig(
                model="fidelity",
                a_csv=args.a_csv,
                b_csv=args.b_csv,
                delta=args.delta,
                at_a=args.at_a,
                at_b=args.at_b,
            )
            if config.delta is None or config.delta <= 0:
                raise ConfigurationError("delta must be positive")
            run(config)
        else:
            config = _load_config(args.config)
            if config.model != args.command:
                raise ConfigurationError(
                    f"config declares model {config.model!r} but the {args.command!r} command was invoked"
                )
            run(config, progress=args.progress)
    except NUMERIC_ERRORS as exc:
        print(_error_line(exc))
        return 3
    except CONFIG_ERRORS as exc:
        print(_error_line(exc))
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
