"""Shared command options and the validated command configuration."""

from dataclasses import dataclass
from pathlib import Path

import click

from refuel.config import ALGORITHMS, RefuelConfig
from refuel.exceptions import UsageError
from refuel.models.instance import NumericMode


@dataclass
class CliConfig:
    """Flags of one command invocation after defaults are resolved."""

    subcommand: str
    instance: Path | None = None
    output: Path | None = None
    algo: str = "fast"
    mode: NumericMode = NumericMode.FAST
    seed: int = 0
    sigma: float | None = None
    n: int | None = None
    dataset: str | None = None
    timeout_s: float | None = None
    scale: float | None = None
    prune: bool = False
    override_size_guard: bool = False
    emit_order: bool = False
    emit_json: bool = False

    def validate(self) -> "CliConfig":
        """Check flag combinations before any work starts.

        Raises:
            UsageError: On missing, conflicting or out-of-range flags
        """
        if self.algo not in ALGORITHMS:
            raise UsageError(f"Unknown algorithm '{self.algo}'", f"Choose one of {', '.join(ALGORITHMS)}")
        if self.emit_order and self.emit_json:
            raise UsageError("--emit-order and --emit-json are mutually exclusive")
        if self.timeout_s is not None and self.timeout_s <= 0:
            raise UsageError(f"--timeout must be positive, got {self.timeout_s}")
        if self.scale is not None and self.scale <= 0:
            raise UsageError(f"--scale must be positive, got {self.scale}")
        if self.seed < 0:
            raise UsageError(f"--seed must be >= 0, got {self.seed}")
        if self.subcommand == "gen":
            self._validate_gen()
        return self

    def _validate_gen(self) -> None:
        single = self.n is not None or self.sigma is not None
        if single and self.dataset is not None:
            raise UsageError("Use either --n/--sigma or --dataset, not both")
        if not single and self.dataset is None:
            raise UsageError("Nothing to generate", "Pass --n and --sigma, or --dataset S1|S2|S3")
        if single and (self.n is None or self.sigma is None):
            raise UsageError("--n and --sigma must be given together")
        if self.n is not None and self.n < 1:
            raise UsageError(f"--n must be >= 1, got {self.n}")
        if self.sigma is not None and self.sigma < 0:
            raise UsageError(f"--sigma must be >= 0, got {self.sigma}")
        if self.dataset is not None and self.output is None:
            raise UsageError("--dataset needs --out-dir")


def resolve_mode(mode: str | None) -> NumericMode:
    """Flag value, else REFUEL_MODE."""
    return NumericMode(mode) if mode else RefuelConfig.get_default_mode()


def resolve_timeout(timeout_s: float | None) -> float:
    """Flag value, else REFUEL_TIMEOUT."""
    return timeout_s if timeout_s is not None else RefuelConfig.get_default_timeout()


mode_option = click.option(
    "--mode",
    type=click.Choice([m.value for m in NumericMode]),
    default=None,
    help="Numeric mode (default: REFUEL_MODE or fast)",
)
instance_argument = click.argument("instance", type=click.Path(path_type=Path))
