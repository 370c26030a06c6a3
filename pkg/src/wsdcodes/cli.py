"""Command-line surface: analyze, verify-lemmas, bound-curves, zoo.

Exit codes: 0 all checks pass, 1 a lemma or bound check failed (the
offending angle or weight is printed), 2 malformed input or violated
precondition, 3 capacity limit exceeded.
"""

from __future__ import annotations

import functools
import json
import sys
import time
from pathlib import Path

import click

from . import report as rpt
from .gf2 import CapacityError, InputError
from .zoo import emit_gmat, get_zoo_entry, parse_gmat, zoo_entries

EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _wrap_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        except CapacityError as exc:
            click.echo(f"capacity error: {exc}", err=True)
            sys.exit(EXIT_CAPACITY)

    return wrapper


def _load_code(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    return parse_gmat(text), Path(path).stem


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


@click.group()
@click.version_option(rpt.TOOL_VERSION, prog_name=rpt.TOOL_NAME)
def main() -> None:
    """Verification toolkit for binary weakly self-dual codes."""


@main.command()
@click.argument("path", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True, help="Report output format.")
@click.option("--theta-steps", default=rpt.DEFAULT_THETA_STEPS, show_default=True,
              help="Grid points on [0.01, pi-0.01] (pi/4 and pi/2 are always added).")
@click.option("--tolerance", default=rpt.DEFAULT_TOLERANCE, show_default=True,
              help="Slack tolerance for lemma and bound checks "
                   "(the closed-form check uses a tenth of this).")
@click.option("--require-wsd", is_flag=True,
              help="Fail (exit 2) unless the code is weakly self-dual.")
@click.option("--seed", default=0, show_default=True,
              help="Seed for the closed-form spot-check sampling.")
@click.option("--output", "-o", type=click.Path(), default=None,
              help="Write the report here instead of stdout.")
@click.option("--plot", type=click.Path(), default=None,
              help="Also render the per-weight bound figure to this file.")
@_wrap_errors
def analyze(path, fmt, theta_steps, tolerance, require_wsd, seed, output, plot):
    """Run the full pipeline on a .gmat file and emit a report."""
    code, name = _load_code(path)
    doc = rpt.analyze_code(
        code,
        name,
        theta_steps=theta_steps,
        tolerance=tolerance,
        seed=seed,
        require_wsd=require_wsd,
    )
    text = json.dumps(doc, indent=1) + "\n" if fmt == "json" else rpt.report_csv(doc)
    _emit(text, output)
    if plot:
        from .plotting import plot_report

        plot_report(doc, plot)
    if not doc["pass"]:
        for line in rpt.failures_of(doc):
            click.echo(f"violation: {line}", err=True)
        sys.exit(EXIT_VIOLATION)


@main.command("verify-lemmas")
@click.argument("path", type=click.Path(), required=False)
@click.option("--zoo", "use_zoo", is_flag=True, help="Run over the built-in code corpus.")
@click.option("--theta-steps", default=rpt.DEFAULT_THETA_STEPS, show_default=True)
@click.option("--lambda-steps", default=rpt.DEFAULT_LAMBDA_STEPS, show_default=True)
@click.option("--tolerance", default=rpt.DEFAULT_TOLERANCE, show_default=True)
@click.option("--seed", default=0, show_default=True)
@_wrap_errors
def verify_lemmas(path, use_zoo, theta_steps, lambda_steps, tolerance, seed):
    """Run the whole property suite on one code or the zoo."""
    if use_zoo == (path is not None):
        raise InputError("give exactly one of PATH or --zoo")
    if use_zoo:
        targets = [(entry.code, entry.name) for entry in zoo_entries()]
    else:
        targets = [_load_code(path)]
    started = time.perf_counter()
    results = []
    for code, name in targets:
        result = rpt.verify_code(
            code,
            name,
            theta_steps=theta_steps,
            lambda_steps=lambda_steps,
            tolerance=tolerance,
            seed=seed,
        )
        results.append(result)
        for line in rpt.verify_lines(result):
            click.echo(line)
    elapsed = time.perf_counter() - started
    good = sum(1 for r in results if r["pass"])
    click.echo(f"summary: {good}/{len(results)} codes pass ({elapsed:.2f} s)")
    if good != len(results):
        sys.exit(EXIT_VIOLATION)


@main.command("bound-curves")
@click.argument("n", type=int)
@click.option("--d", type=int, default=None,
              help="Design distance for the doubly-even comparison curve.")
@click.option("--k", type=int, default=None,
              help="Dimension for the binomial baseline (default n/2).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="csv",
              show_default=True, help="Combined-table output format.")
@click.option("--output", "-o", type=click.Path(), default=None,
              help="Write the combined table here instead of stdout.")
@click.option("--out-dir", type=click.Path(), default=None,
              help="Also write plot-ready two-column CSVs, one per curve.")
@click.option("--plot", type=click.Path(), default=None,
              help="Also render the curves to this image file.")
@_wrap_errors
def bound_curves(n, d, k, fmt, output, out_dir, plot):
    """Emit log2 bound curves over weights below n/2 (no code required)."""
    table = rpt.bound_curve_table(n, d, k)
    text = json.dumps(table, indent=1) + "\n" if fmt == "json" else rpt.curves_csv(table)
    _emit(text, output)
    if out_dir:
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for curve, body in rpt.per_curve_csv(table).items():
            (directory / f"{curve}.csv").write_text(body)
    if plot:
        from .plotting import plot_bound_curves

        plot_bound_curves(table, plot)


@main.group()
def zoo() -> None:
    """Inspect and export the built-in code corpus."""


@zoo.command("list")
@_wrap_errors
def zoo_list():
    """List the zoo codes with their parameters."""
    from .gf2 import code_metrics, weight_distribution

    for entry in zoo_entries():
        code = entry.code
        metrics = code_metrics(code, weight_distribution(code))
        flags = []
        if metrics.weakly_self_dual:
            flags.append("self-dual" if 2 * code.k == code.n else "weakly self-dual")
        if metrics.doubly_even:
            flags.append("doubly-even")
        tail = f" ({', '.join(flags)})" if flags else ""
        click.echo(
            f"{entry.name:<16} [{code.n},{code.k}] d={metrics.d}{tail}  "
            f"- {entry.provenance}"
        )


@zoo.command("emit")
@click.argument("name")
@click.option("--output", "-o", type=click.Path(), default=None,
              help="Write the .gmat text here instead of stdout.")
@_wrap_errors
def zoo_emit(name, output):
    """Emit one zoo code in .gmat form."""
    entry = get_zoo_entry(name)
    _emit(emit_gmat(entry.code), output)


if __name__ == "__main__":
    main()
