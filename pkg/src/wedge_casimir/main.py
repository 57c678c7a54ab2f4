"""
Command-line front end.

Computes stress, torque and parallel-plate tables, evaluates the Green
kernel mode sum and runs the verification suites. Every command writes one
CSV or JSON document; nothing is written when the run fails.
"""

import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Annotated, Callable, Optional

import click
import numpy as np
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table
from typer.core import TyperGroup

from .checker import run_suites
from .errors import BesselOverflowError, ConvergenceError, DomainError
from .greenfn import green_partial_sum, jump_check, radial_green
from .models import (
    Command,
    OutputFormat,
    PhysicalConstants,
    RunConfig,
    SpectralMode,
    StressMethodChoice,
    Suite,
    SuiteReport,
    Units,
    WedgeGeometry,
    validated,
)
from .utils import get_numerics_config, get_settings, load_run_file
from .utils.output import build_document, payload_json, render, unit_label, write_document
from .wedge import PARALLEL_PLATE_LIMIT, parallel_plate_limit, tphiphi_closed, tphiphi_renormalized, torque_density


logger = logging.getLogger("wedge_casimir")

EXIT_VALIDATION = 1
EXIT_CONVERGENCE = 2


class WedgeGroup(TyperGroup):
    """Command group that reports malformed command-line input as a validation error."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_VALIDATION
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_VALIDATION
            raise


app = typer.Typer(
    name="wedge-casimir",
    help="Casimir stress and torque in a perfectly conducting wedge.",
    cls=WedgeGroup,
    add_completion=False,
    no_args_is_help=True,
)
console = Console(stderr=True)


# Common options
Tol = Annotated[Optional[float], typer.Option("--tol", help="Absolute tolerance (default 1e-8)")]
UnitsOpt = Annotated[Optional[Units], typer.Option("--units", help="natural or si")]
FormatOpt = Annotated[Optional[OutputFormat], typer.Option("--format", help="csv or json")]
Out = Annotated[Optional[Path], typer.Option("--out", help="Write the document here instead of stdout")]
ConfigFile = Annotated[Optional[Path], typer.Option("--config", help="YAML or JSON run file")]
Verbose = Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging on stderr")]

Beta = Annotated[Optional[float], typer.Option("--beta", help="Opening angle in (0, 2*pi]")]
Rho = Annotated[Optional[float], typer.Option("--rho", help="Radial distance > 0")]


def _setup_logging(verbose: bool) -> None:
    settings = get_settings()
    level = "DEBUG" if verbose or settings.debug else settings.log_level.upper()
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False, show_time=False)],
        force=True,
    )


def _resolve(command: Command, config_path: Optional[Path], **flags) -> RunConfig:
    """Merge flags over the config file over defaults."""
    values = {"tol": get_numerics_config().cli.default_tol}
    if config_path is not None:
        values.update(load_run_file(config_path))
    values.update({k: v for k, v in flags.items() if v is not None})
    values["command"] = command
    return RunConfig.model_validate(values)


def _require(run: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(run, name) is None:
            raise DomainError(name, "required for this command")


def _describe(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        error = exc.errors()[0]
        location = ".".join(str(part) for part in error["loc"]) or "input"
        return f"{location}: {error['msg']}"
    return str(exc)


def _constants(run: RunConfig) -> PhysicalConstants:
    return PhysicalConstants.si() if run.units == Units.SI.value else PhysicalConstants.natural()


def _execute(
    command: Command,
    config_path: Optional[Path],
    verbose: bool,
    compute: Callable[[RunConfig], tuple],
    **flags,
) -> None:
    """
    Resolve the run, compute, and emit the document.

    Exit status: 0 on success, 1 on invalid input, 2 on numerical
    non-convergence or a failed verification.
    """
    _setup_logging(verbose)
    try:
        run = _resolve(command, config_path, **flags)
        results, diagnostics, ok = compute(run)
    except ConvergenceError as e:
        logger.error("[ERROR] %s", e)
        report = {"error": type(e).__name__, "message": str(e), "payload": payload_json(e.payload)}
        typer.echo(json.dumps(report, indent=2), err=True)
        raise typer.Exit(EXIT_CONVERGENCE)
    except BesselOverflowError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(EXIT_CONVERGENCE)
    except (ValueError, OSError) as e:
        typer.echo(f"error: {_describe(e)}", err=True)
        raise typer.Exit(EXIT_VALIDATION)

    document = build_document(run, results, diagnostics)
    try:
        write_document(render(document, run.output_format), run.output_path)
    except OSError as e:
        typer.echo(f"error: out: {e}", err=True)
        raise typer.Exit(EXIT_VALIDATION)

    if not ok:
        raise typer.Exit(EXIT_CONVERGENCE)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _compute_stress(run: RunConfig) -> tuple:
    _require(run, "beta", "rho")
    geom = validated(WedgeGeometry, beta=run.beta, rho=run.rho)
    consts = _constants(run)

    if run.method == StressMethodChoice.SERIES.value:
        result, trace = tphiphi_renormalized(geom, run.tol)
        value = result.value * consts.hbar_c
        error = result.error_estimate * consts.hbar_c
        diagnostics = {"extrapolation": trace.model_dump(mode="json")}
    else:
        result = tphiphi_closed(geom, consts)
        value, error = result.value, result.error_estimate
        diagnostics = {}

    results = {
        "value": value,
        "error_estimate": error,
        "method": result.method,
        "units": unit_label("stress", run.units),
    }
    logger.info("[OK] stress beta=%.17g rho=%.17g -> %.17g", geom.beta, geom.rho, value)
    return results, diagnostics, True


def _compute_torque(run: RunConfig) -> tuple:
    _require(run, "beta", "rho")
    geom = validated(WedgeGeometry, beta=run.beta, rho=run.rho)
    result = torque_density(geom, _constants(run))
    results = {
        "value": result.value,
        "error_estimate": 0.0,
        "method": "closed_form",
        "units": unit_label("torque", run.units),
        "notes": result.notes,
    }
    return results, {}, True


def _limit_row(d: float, beta: float, scale: float) -> dict:
    normalized = parallel_plate_limit(d, beta)
    return {
        "beta": beta,
        "rho": d / beta,
        "normalized": normalized * scale,
        "deviation": (normalized - PARALLEL_PLATE_LIMIT) * scale,
    }


def _compute_limit_table(run: RunConfig) -> tuple:
    _require(run, "d", "beta_start", "beta_end", "steps")
    if not (math.isfinite(run.d) and run.d > 0.0):
        raise DomainError("d", f"plate separation must be finite and > 0, got {run.d!r}")
    if not 0.0 < run.beta_start <= math.pi / 4:
        raise DomainError("beta_start", f"must lie in (0, pi/4], got {run.beta_start!r}")
    if not 0.0 < run.beta_end < run.beta_start:
        raise DomainError("beta_end", f"must lie in (0, beta_start), got {run.beta_end!r}")
    if run.steps < 2:
        raise DomainError("steps", f"must be >= 2, got {run.steps!r}")

    betas = [float(b) for b in np.geomspace(run.beta_start, run.beta_end, run.steps)]
    scale = _constants(run).hbar_c

    # Rows are independent; map() keeps them in input order
    workers = get_numerics_config().cli.workers
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda beta: _limit_row(run.d, beta, scale), betas))

    results = {
        "rows": rows,
        "limit": PARALLEL_PLATE_LIMIT * scale,
        "units": unit_label("limit-table", run.units),
    }
    return results, {}, True


def _compute_green(run: RunConfig) -> tuple:
    _require(run, "beta", "rho", "phi", "rho_prime", "phi_prime", "lambda_e", "m_max")
    geom = validated(WedgeGeometry, beta=run.beta, rho=run.rho, phi=run.phi)

    partial_sum = green_partial_sum(geom, run.rho_prime, run.phi_prime, run.lambda_e, run.m_max)
    mode = SpectralMode.from_geometry(1, geom.beta, run.lambda_e)
    h = 1e-3 * run.rho_prime

    results = {
        "partial_sum": partial_sum,
        "radial_kernel_m1": radial_green(mode, geom.rho, run.rho_prime),
        "jump_m1": jump_check(mode, run.rho_prime, h),
        "jump_expected": -1.0 / run.rho_prime,
        "units": unit_label("green", run.units),
    }
    return results, {"jump_step": h}, True


def _render_report(report: SuiteReport) -> None:
    table = Table(title="Verification")
    table.add_column("Suite")
    table.add_column("Check")
    table.add_column("Measured", justify="right")
    table.add_column("Bound", justify="right")
    table.add_column("Status")
    for check in report.checks:
        status = "[green]PASS[/green]" if check.passed else "[red]FAIL[/red]"
        table.add_row(check.suite, check.name, f"{check.measured:.3e}", f"{check.bound:.3e}", status)
    console.print(table)


def _compute_verify(run: RunConfig) -> tuple:
    report = run_suites(run.suite, run.tol)
    _render_report(report)

    counts = report.get_counts()
    results = {
        "passed": report.passed,
        "counts": counts,
        "checks": [c.model_dump(mode="json") for c in report.checks],
    }
    return results, {"suite": run.suite}, report.passed


@app.command()
def stress(
    beta: Beta = None,
    rho: Rho = None,
    method: Annotated[Optional[StressMethodChoice], typer.Option("--method")] = None,
    tol: Tol = None,
    units: UnitsOpt = None,
    output_format: FormatOpt = None,
    out: Out = None,
    config: ConfigFile = None,
    verbose: Verbose = False,
):
    """Renormalized phi-phi stress at (beta, rho)."""
    _execute(
        Command.STRESS, config, verbose, _compute_stress,
        beta=beta, rho=rho, method=method, tol=tol, units=units,
        output_format=output_format, output_path=out,
    )


@app.command()
def torque(
    beta: Beta = None,
    rho: Rho = None,
    tol: Tol = None,
    units: UnitsOpt = None,
    output_format: FormatOpt = None,
    out: Out = None,
    config: ConfigFile = None,
    verbose: Verbose = False,
):
    """Casimir torque density per unit height."""
    _execute(
        Command.TORQUE, config, verbose, _compute_torque,
        beta=beta, rho=rho, tol=tol, units=units,
        output_format=output_format, output_path=out,
    )


@app.command("limit-table")
def limit_table(
    d: Annotated[Optional[float], typer.Option("--d", help="Plate separation rho*beta")] = None,
    beta_start: Annotated[Optional[float], typer.Option("--beta-start")] = None,
    beta_end: Annotated[Optional[float], typer.Option("--beta-end")] = None,
    steps: Annotated[Optional[int], typer.Option("--steps")] = None,
    tol: Tol = None,
    units: UnitsOpt = None,
    output_format: FormatOpt = None,
    out: Out = None,
    config: ConfigFile = None,
    verbose: Verbose = False,
):
    """Approach to the parallel-plate limit along rho*beta = d."""
    _execute(
        Command.LIMIT_TABLE, config, verbose, _compute_limit_table,
        d=d, beta_start=beta_start, beta_end=beta_end, steps=steps, tol=tol,
        units=units, output_format=output_format, output_path=out,
    )


@app.command()
def green(
    beta: Beta = None,
    rho: Rho = None,
    rho_prime: Annotated[Optional[float], typer.Option("--rho-prime")] = None,
    phi: Annotated[Optional[float], typer.Option("--phi")] = None,
    phi_prime: Annotated[Optional[float], typer.Option("--phi-prime")] = None,
    lambda_e: Annotated[Optional[float], typer.Option("--lambda-e")] = None,
    m_max: Annotated[Optional[int], typer.Option("--m-max")] = None,
    tol: Tol = None,
    units: UnitsOpt = None,
    output_format: FormatOpt = None,
    out: Out = None,
    config: ConfigFile = None,
    verbose: Verbose = False,
):
    """Truncated Green-kernel mode sum and the m = 1 jump check."""
    _execute(
        Command.GREEN, config, verbose, _compute_green,
        beta=beta, rho=rho, rho_prime=rho_prime, phi=phi, phi_prime=phi_prime,
        lambda_e=lambda_e, m_max=m_max, tol=tol, units=units,
        output_format=output_format, output_path=out,
    )


@app.command()
def verify(
    suite: Annotated[Optional[Suite], typer.Option("--suite")] = None,
    tol: Tol = None,
    units: UnitsOpt = None,
    output_format: FormatOpt = None,
    out: Out = None,
    config: ConfigFile = None,
    verbose: Verbose = False,
):
    """Run the verification suites; exit 0 iff every check passes."""
    _execute(
        Command.VERIFY, config, verbose, _compute_verify,
        suite=suite, tol=tol, units=units,
        output_format=output_format, output_path=out,
    )


def main():
    """Console-script entry point."""
    app()


if __name__ == "__main__":
    main()
