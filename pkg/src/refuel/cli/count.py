"""CLI command for counting potential schedules."""

import json

import click

from refuel.baselines import count_potential_brute
from refuel.cli.options import CliConfig, instance_argument, mode_option, resolve_mode
from refuel.solver import enumerate_potential
from refuel.state.instance_store import InstanceStore
from refuel.utils.error_handler import handle_errors
from refuel.utils.profiler import measure_time


@click.command()
@instance_argument
@click.option("--brute", is_flag=True, help="Filter all n! permutations instead (n <= 10)")
@mode_option
@click.option("--override-size-guard", is_flag=True, help="Let --brute run on more than 10 jobs")
@click.option("--emit-json", is_flag=True, help="Print the result as JSON")
@handle_errors
def count(instance, brute: bool, mode: str | None, override_size_guard: bool, emit_json: bool):
    """
    Count the potential schedules K of INSTANCE.

    By default K is the number of orders the recursive solver enumerates.
    """
    config = CliConfig(
        "count",
        instance=instance,
        mode=resolve_mode(mode),
        override_size_guard=override_size_guard,
        emit_json=emit_json,
    ).validate()
    loaded = InstanceStore(config.instance).load()

    with measure_time("count") as watch:
        if brute:
            total = count_potential_brute(loaded, config.mode, config.override_size_guard)
        else:
            total = enumerate_potential(loaded.jobs, 0, mode=config.mode)

    if config.emit_json:
        data = {"count": total, "method": "brute" if brute else "fast", "elapsed_ms": watch.elapsed * 1000.0}
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(str(total))
