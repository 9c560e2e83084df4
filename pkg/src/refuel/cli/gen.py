"""CLI command for generating instances and datasets."""

import json
from pathlib import Path

import click
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn

from refuel.cli.options import CliConfig
from refuel.config import RefuelConfig
from refuel.generation import MANIFEST_NAME, generate_instance, plan_dataset, write_dataset
from refuel.models.generation import DatasetKind, GenSpec
from refuel.state.instance_store import InstanceStore, instance_to_dict
from refuel.utils.error_handler import handle_errors
from refuel.utils.output_formatter import OutputFormatter


@click.command()
@click.option("--n", "n", type=int, default=None, help="Number of jobs of a single instance")
@click.option("--sigma", type=float, default=None, help="Standard deviation of the log2 weight factor")
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed")
@click.option("--index", type=int, default=0, show_default=True, help="Instance index within the seed's stream")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Instance file (default: print JSON)")
@click.option("--dataset", type=click.Choice([k.value for k in DatasetKind if k is not DatasetKind.CUSTOM]))
@click.option("--scale", type=float, default=None, help="Multiply job and instance counts, rounding up")
@click.option("--max-n", type=int, default=None, help="Drop dataset sizes above this job count")
@click.option("--count", type=int, default=None, help="Instances per configuration")
@click.option("--sigma-step", type=float, default=None, help="Sigma grid step (multiple of 0.001)")
@click.option("--out-dir", type=click.Path(path_type=Path), default=None, help="Dataset directory")
@click.option("--full-scale", is_flag=True, help="Use the full experiment configuration")
@handle_errors
def gen(
    n: int | None,
    sigma: float | None,
    seed: int,
    index: int,
    out: Path | None,
    dataset: str | None,
    scale: float | None,
    max_n: int | None,
    count: int | None,
    sigma_step: float | None,
    out_dir: Path | None,
    full_scale: bool,
):
    """
    Generate a random instance or a whole dataset.

    \b
    Single instance:  refuel gen --n 20 --sigma 0.5 --seed 7 --out inst.json
    Dataset:          refuel gen --dataset S1 --out-dir data/s1

    Datasets default to desk scale; --full-scale selects the full setup.
    """
    config = CliConfig(
        "gen",
        output=out_dir if dataset else out,
        seed=seed,
        sigma=sigma,
        n=n,
        dataset=dataset,
        scale=scale,
    ).validate()
    formatter = OutputFormatter()

    if dataset is None:
        instance = generate_instance(GenSpec(config.n, config.sigma, seed), index)
        if out is None:
            click.echo(json.dumps(instance_to_dict(instance), indent=2))
            return
        InstanceStore(out).save(instance)
        formatter.success(f"Wrote {instance.n} jobs to {out}")
        return

    defaults = RefuelConfig.dataset_defaults(dataset, full_scale)
    plan = plan_dataset(
        DatasetKind(dataset),
        scale if scale is not None else defaults["scale"],
        seed,
        max_n if max_n is not None else defaults["max_n"],
        count if count is not None else defaults["count"],
        sigma_step if sigma_step is not None else defaults["sigma_step"],
    )
    formatter.info(f"{dataset}: {len(plan.specs)} configurations, {plan.total} instances")

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        console=formatter.console,
    ) as progress:
        task = progress.add_task(f"Generating {dataset}", total=plan.total)
        entries = write_dataset(plan, out_dir, on_instance=lambda _: progress.advance(task))

    formatter.success(f"Wrote {len(entries)} instances and {out_dir / MANIFEST_NAME}")
