"""Rich console output formatting."""

from rich.console import Console

from refuel.config import RefuelConfig


class OutputFormatter:
    """Status lines on stderr so stdout stays machine readable."""

    def __init__(self, console: Console | None = None):
        self.console = console or Console(stderr=True)

    def success(self, message: str) -> None:
        self.console.print(f"[green]✓[/green] {message}")

    def error(self, message: str) -> None:
        self.console.print(f"[red]✗[/red] {message}")

    def warning(self, message: str) -> None:
        self.console.print(f"[yellow]⚠[/yellow] {message}")

    def info(self, message: str) -> None:
        self.console.print(f"[blue]ℹ[/blue] {message}")

    def debug(self, message: str) -> None:
        """Dim trace line, shown only with REFUEL_DEBUG."""
        if RefuelConfig.is_debug_enabled():
            self.console.print(f"[dim]{message}[/dim]")
