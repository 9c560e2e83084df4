"""CLI command for solving one instance."""

import json
from fractions import Fraction

import click

from refuel.bench.runner import solve_with
from refuel.cli.options import CliConfig, instance_argument, mode_option, resolve_mode, resolve_timeout
from refuel.config import ALGORITHMS
from refuel.core.schedule import to_dropout_order
from refuel.models.report import SolveReport
from refuel.state.instance_store import InstanceStore
from refuel.utils.error_handler import handle_errors


def format_report(report: SolveReport, dropout: bool = False) -> str:
    """Plain text report; numbers match the JSON output."""
    lines = [
        f"algo: {report.algo}",
        f"mode: {report.mode.value}",
        f"payoff: {float(report.payoff)!r}",
    ]
    if isinstance(report.payoff, Fraction):
        lines.append(f"payoff_exact: {report.payoff.numerator}/{report.payoff.denominator}")
    lines += [
        f"order: {','.join(map(str, report.order))}",
        f"leaves: {report.leaves}",
        f"branches: {report.branches}",
        f"nodes: {report.nodes}",
        f"elapsed_ms: {report.elapsed_ms!r}",
    ]
    if dropout:
        lines.append(f"dropout: {','.join(map(str, to_dropout_order(report.order)))}")
    return "\n".join(lines)


@click.command()
@instance_argument
@click.option("--algo", type=click.Choice(ALGORITHMS), default="fast", show_default=True)
@mode_option
@click.option("--timeout", "timeout_s", type=float, default=None, help="Seconds (default: REFUEL_TIMEOUT or 60)")
@click.option("--prune", is_flag=True, help="Enable sound pruning (fast: best bound, astar: dominated arcs)")
@click.option("--override-size-guard", is_flag=True, help="Let brute force and A* run on large instances")
@click.option("--emit-order", is_flag=True, help="Print only the order, comma separated")
@click.option("--emit-json", is_flag=True, help="Print the report as JSON")
@click.option("--dropout", is_flag=True, help="Also print the drop-out order (reverse of the processing order)")
@handle_errors
def solve(
    instance,
    algo: str,
    mode: str | None,
    timeout_s: float | None,
    prune: bool,
    override_size_guard: bool,
    emit_order: bool,
    emit_json: bool,
    dropout: bool,
):
    """
    Solve INSTANCE and print the best order and its payoff.

    The payoff is Σ w/C maximized over processing orders. Exit code 3 means a
    size guard refused the instance, 4 a timeout.
    """
    config = CliConfig(
        "solve",
        instance=instance,
        algo=algo,
        mode=resolve_mode(mode),
        timeout_s=resolve_timeout(timeout_s),
        prune=prune,
        override_size_guard=override_size_guard,
        emit_order=emit_order,
        emit_json=emit_json,
    ).validate()

    loaded = InstanceStore(config.instance).load()
    report = solve_with(
        config.algo,
        loaded,
        config.mode,
        config.timeout_s,
        config.prune,
        config.override_size_guard,
    )

    if config.emit_order:
        click.echo(",".join(map(str, report.order)))
    elif config.emit_json:
        data = report.to_dict()
        if dropout:
            data["dropout"] = to_dropout_order(report.order)
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(format_report(report, dropout))
