"""Main entry point for `python -m refuel` execution."""

from refuel.cli.commands import refuel

if __name__ == "__main__":
    refuel()
