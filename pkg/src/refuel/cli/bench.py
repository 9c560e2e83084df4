"""CLI command for running benchmarks over a dataset manifest."""

from pathlib import Path

import click
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn
from rich.table import Table

from refuel.bench import hardness_report, run_bench, speedup_report, write_bench_outputs
from refuel.cli.options import CliConfig, mode_option
from refuel.config import ALGORITHMS, BenchProfile, RefuelConfig
from refuel.exceptions import UsageError
from refuel.models.bench import BenchStatus
from refuel.models.instance import NumericMode
from refuel.state.instance_store import read_manifest
from refuel.utils.error_handler import handle_errors
from refuel.utils.output_formatter import OutputFormatter


def parse_algos(text: str) -> list[str]:
    """Split a comma separated algorithm list.

    Raises:
        UsageError: On an empty list or an unknown name
    """
    algos = [name.strip() for name in text.split(",") if name.strip()]
    unknown = [name for name in algos if name not in ALGORITHMS]
    if not algos or unknown:
        raise UsageError(f"Bad --algos value '{text}'", f"Use a comma separated subset of {', '.join(ALGORITHMS)}")
    return algos


@click.command()
@click.argument("manifest", type=click.Path(path_type=Path))
@click.option("--algos", default=None, help="Comma separated algorithms (default: fast,astar)")
@click.option("--timeout", "timeout_s", type=float, default=None, help="Seconds per run")
@mode_option
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("--out-dir", type=click.Path(path_type=Path), default=None, help="Output directory")
@click.option("--profile", type=click.Path(path_type=Path), default=None, help="YAML bench profile")
@click.option("--prune", is_flag=True, default=None, help="Enable sound pruning in fast and astar")
@click.option("--override-size-guard", is_flag=True, help="Let brute force and A* run on large instances")
@handle_errors
def bench(
    manifest: Path,
    algos: str | None,
    timeout_s: float | None,
    mode: str | None,
    workers: int | None,
    out_dir: Path | None,
    profile: Path | None,
    prune: bool | None,
    override_size_guard: bool,
):
    """
    Time every algorithm on every instance of MANIFEST.

    Writes records.csv, speedup/hardness/table1 reports, plot point files and
    summary.md into the output directory. Flags override the profile, the
    profile overrides REFUEL_* environment defaults.
    """
    settings = BenchProfile.load(profile) if profile else BenchProfile.from_environment()
    if algos is not None:
        settings.algos = parse_algos(algos)
    if timeout_s is not None:
        settings.timeout_s = timeout_s
    if mode is not None:
        settings.mode = NumericMode(mode)
    if workers is not None:
        if workers < 1:
            raise UsageError(f"--workers must be >= 1, got {workers}")
        settings.workers = workers
    if prune:
        settings.prune = True
    config = CliConfig(
        "bench",
        timeout_s=settings.timeout_s,
        mode=settings.mode,
        prune=settings.prune,
        override_size_guard=override_size_guard,
    ).validate()
    out_dir = out_dir or RefuelConfig.get_output_dir()

    formatter = OutputFormatter()
    entries = read_manifest(manifest)
    formatter.info(
        f"{len(entries)} instances × {len(settings.algos)} algorithms, "
        f"timeout {settings.timeout_s:g}s, {settings.workers} worker(s)"
    )

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=formatter.console,
    ) as progress:
        task = progress.add_task("Benchmarking", total=len(entries) * len(settings.algos))
        records = run_bench(
            entries,
            settings.algos,
            settings.timeout_s,
            settings.mode,
            settings.workers,
            settings.prune,
            config.override_size_guard,
            on_record=lambda _: progress.advance(task),
        )

    for record in records:
        if record.status is BenchStatus.SKIPPED:
            formatter.warning(f"skipped {record.algo} on {record.instance}: {record.note}")

    paths = write_bench_outputs(
        records,
        out_dir,
        {
            "algos": settings.algos,
            "mode": settings.mode.value,
            "timeout_s": settings.timeout_s,
            "workers": settings.workers,
        },
    )
    _print_summary(records, Console())
    formatter.success(f"Wrote {len(paths)} files to {out_dir}")


def _print_summary(records, console: Console) -> None:
    speedup = speedup_report(records)
    if not speedup.empty:
        table = Table(title="Speedup (astar / fast)", show_header=True, header_style="bold cyan")
        table.add_column("n", justify="right")
        table.add_column("Instances", justify="right")
        table.add_column("Mean fast (s)", justify="right")
        table.add_column("Mean astar (s)", justify="right")
        table.add_column("Ratio", justify="right")
        for row in speedup.rows:
            table.add_row(
                str(row.n),
                str(row.instances),
                f"{row.mean_fast_s:.6f}",
                f"{row.mean_astar_s:.6f}",
                f"{row.ratio:.2f}",
            )
        console.print(table)
    hardness = hardness_report(records)
    if hardness.correlation is not None:
        console.print(f"Spearman(log K, log time) = {hardness.correlation:.4f} over {len(hardness.rows)} instances")
    elif hardness.rows:
        console.print(f"Hardness correlation {hardness.marker}")
