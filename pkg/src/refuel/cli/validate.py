"""CLI command for checking an order against the dominance relations."""

import json
from pathlib import Path

import click
from rich.console import Console
from rich.table import Table

from refuel.cli.options import CliConfig, instance_argument, mode_option, resolve_mode
from refuel.core.schedule import schedule_payoff
from refuel.dominance import is_potential
from refuel.exceptions import UsageError, ValidationFailedError
from refuel.state.instance_store import InstanceStore, parse_order, read_order_file
from refuel.utils.error_handler import handle_errors


@click.command()
@instance_argument
@click.option("--order", "order_text", default=None, help='Job ids in processing order, e.g. "3,1,0,2"')
@click.option("--order-file", type=click.Path(path_type=Path), default=None, help="File holding the order")
@mode_option
@click.option("--emit-json", is_flag=True, help="Print the result as JSON")
@handle_errors
def validate(instance, order_text: str | None, order_file: Path | None, mode: str | None, emit_json: bool):
    """
    Check whether an order of INSTANCE is a potential schedule.

    Exits 0 when no dominance relation is violated, 5 otherwise.
    """
    if (order_text is None) == (order_file is None):
        raise UsageError("Give exactly one of --order and --order-file")
    config = CliConfig("validate", instance=instance, mode=resolve_mode(mode), emit_json=emit_json).validate()

    loaded = InstanceStore(config.instance).load()
    order = parse_order(order_text) if order_text is not None else read_order_file(order_file)
    result = is_potential(loaded, order, config.mode)
    payoff = schedule_payoff(loaded, order, 0, config.mode)

    if config.emit_json:
        data = result.to_dict()
        data["payoff"] = float(payoff)
        click.echo(json.dumps(data, indent=2))
    else:
        console = Console()
        console.print(f"payoff: {float(payoff)!r}")
        if result.valid:
            console.print("[green]✓[/green] potential schedule: no dominance relation violated")
        else:
            table = Table(title="Violations", show_header=True, header_style="bold cyan")
            table.add_column("Earlier", justify="right")
            table.add_column("Later", justify="right")
            table.add_column("Reason")
            for violation in result.violations:
                table.add_row(str(violation.earlier), str(violation.later), violation.reason.value)
            console.print(table)

    if not result.valid:
        raise ValidationFailedError(len(result.violations))
