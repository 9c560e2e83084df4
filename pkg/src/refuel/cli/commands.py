"""Main CLI entry point."""

import click

from refuel import __version__
from refuel.cli.bench import bench
from refuel.cli.count import count
from refuel.cli.gen import gen
from refuel.cli.solve import solve
from refuel.cli.validate import validate


@click.group()
@click.version_option(version=__version__, prog_name="refuelkit")
def refuel():
    """refuelkit: exact solver and benchmarks for the airplane refueling problem."""


refuel.add_command(gen)
refuel.add_command(solve)
refuel.add_command(validate)
refuel.add_command(count)
refuel.add_command(bench)


if __name__ == "__main__":
    refuel()
