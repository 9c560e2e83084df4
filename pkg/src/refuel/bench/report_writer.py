"""CSV, plot-point and Markdown output of bench results."""

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, select_autoescape

from refuel.bench.reports import (
    hardness_points,
    hardness_report,
    sigma_points,
    speedup_points,
    speedup_report,
    table1_report,
)
from refuel.exceptions import DatasetWriteError, ManifestError
from refuel.models.bench import CSV_HEADER, BenchRecord, BenchStatus, HardnessReport, SpeedupReport, Table1Row

RECORDS_FILE = "records.csv"
SPEEDUP_FILE = "speedup.csv"
HARDNESS_FILE = "hardness.csv"
TABLE1_FILE = "table1.csv"
SPEEDUP_POINTS_FILE = "speedup_points.csv"
HARDNESS_POINTS_FILE = "hardness_points.csv"
SIGMA_POINTS_FILE = "sigma_points.csv"
SUMMARY_FILE = "summary.md"


def _fmt(value: float | None) -> str:
    return "" if value is None else repr(value)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    """Write a header and rows as comma separated text.

    Raises:
        DatasetWriteError: If the file cannot be written
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as e:
        raise DatasetWriteError(path, e.strerror or str(e)) from e


def write_records(records: list[BenchRecord], path: Path) -> None:
    write_csv(path, CSV_HEADER, (record.to_row() for record in records))


def read_records(path: Path) -> list[BenchRecord]:
    """Read a records CSV back so aggregates can be recomputed.

    Raises:
        ManifestError: If the file is missing or has another header
    """
    if not path.exists():
        raise ManifestError(path, "file not found")
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or list(reader.fieldnames) != CSV_HEADER:
            raise ManifestError(path, f"expected header {','.join(CSV_HEADER)}")
        return [
            BenchRecord(
                instance=row["instance"],
                n=int(row["n"]),
                sigma=float(row["sigma"]),
                seed=int(row["seed"]),
                algo=row["algo"],
                mode=row["mode"],
                elapsed=float(row["elapsed_s"]),
                status=BenchStatus(row["status"]),
                payoff=float(row["payoff"]) if row["payoff"] else None,
                leaves=int(row["leaves"]) if row["leaves"] else None,
                nodes=int(row["nodes"]) if row["nodes"] else None,
            )
            for row in reader
        ]


def write_speedup(report: SpeedupReport, path: Path) -> None:
    rows = [[r.n, r.instances, repr(r.mean_fast_s), repr(r.mean_astar_s), repr(r.ratio)] for r in report.rows]
    write_csv(path, ["n", "instances", "mean_fast_s", "mean_astar_s", "ratio"], rows)


def write_hardness(report: HardnessReport, path: Path) -> None:
    rows = [[r.instance, repr(r.sigma), r.leaves, repr(r.elapsed)] for r in report.rows]
    write_csv(path, ["instance", "sigma", "leaves", "elapsed_s"], rows)


def write_table1(rows: list[Table1Row], path: Path) -> None:
    body = [
        [r.n, f"{r.band_lo:.1f}", f"{r.band_hi:.1f}", r.instances, r.solved, _fmt(r.avg_s), _fmt(r.std_s), repr(r.percent_solved)]
        for r in rows
    ]
    write_csv(path, ["n", "sigma_lo", "sigma_hi", "instances", "solved", "avg_s", "std_s", "percent_solved"], body)


def write_points(points: list[tuple], header: tuple[str, str], path: Path) -> None:
    """(x, y) pairs for plotting."""
    write_csv(path, header, ([repr(x), repr(y)] for x, y in points))


class SummaryWriter:
    """Renders summary.md from the bench-summary template."""

    def __init__(self, template_dir: Path | None = None):
        if template_dir is None:
            template_dir = Path(__file__).parent / "templates"
        self.env = Environment(
            loader=FileSystemLoader(str(template_dir)),
            autoescape=select_autoescape(enabled_extensions=()),
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def render(
        self,
        records: list[BenchRecord],
        speedup: SpeedupReport,
        hardness: HardnessReport,
        table1: list[Table1Row],
        settings: dict,
    ) -> str:
        counts = {status.value: sum(r.status is status for r in records) for status in BenchStatus}
        template = self.env.get_template("bench-summary.md.j2")
        return template.render(
            records=records,
            counts=counts,
            speedup=speedup,
            hardness=hardness,
            table1=table1,
            settings=settings,
        )

    def write(self, path: Path, *args, **kwargs) -> None:
        """Render and write; arguments as for render().

        Raises:
            DatasetWriteError: If the file cannot be written
        """
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.render(*args, **kwargs), encoding="utf-8")
        except OSError as e:
            raise DatasetWriteError(path, e.strerror or str(e)) from e


def write_bench_outputs(records: list[BenchRecord], out_dir: Path, settings: dict) -> dict[str, Path]:
    """Write records, every report, plot points and summary.md into out_dir."""
    speedup = speedup_report(records)
    hardness = hardness_report(records)
    table1 = table1_report(records)
    names = (
        RECORDS_FILE,
        SPEEDUP_FILE,
        HARDNESS_FILE,
        TABLE1_FILE,
        SPEEDUP_POINTS_FILE,
        HARDNESS_POINTS_FILE,
        SIGMA_POINTS_FILE,
        SUMMARY_FILE,
    )
    paths = {name: out_dir / name for name in names}
    write_records(records, paths[RECORDS_FILE])
    write_speedup(speedup, paths[SPEEDUP_FILE])
    write_hardness(hardness, paths[HARDNESS_FILE])
    write_table1(table1, paths[TABLE1_FILE])
    write_points(speedup_points(speedup), ("n", "ratio"), paths[SPEEDUP_POINTS_FILE])
    write_points(hardness_points(hardness), ("leaves", "elapsed_s"), paths[HARDNESS_POINTS_FILE])
    write_points(sigma_points(hardness), ("sigma", "leaves"), paths[SIGMA_POINTS_FILE])
    SummaryWriter().write(paths[SUMMARY_FILE], records, speedup, hardness, table1, settings)
    return paths
