"""CLI module exports."""

from refuel.cli.commands import refuel as cli

__all__ = ["cli"]
