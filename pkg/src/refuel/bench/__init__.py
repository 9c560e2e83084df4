"""Benchmark harness and reports."""

from refuel.bench.report_writer import SummaryWriter, read_records, write_bench_outputs, write_records
from refuel.bench.reports import (
    MARKER_OMITTED,
    MARKER_UNDEFINED,
    hardness_points,
    hardness_report,
    sigma_band,
    sigma_points,
    speedup_points,
    speedup_report,
    table1_report,
)
from refuel.bench.runner import BenchTask, run_bench, run_task, solve_with

__all__ = [
    "MARKER_OMITTED",
    "MARKER_UNDEFINED",
    "BenchTask",
    "SummaryWriter",
    "hardness_points",
    "hardness_report",
    "read_records",
    "run_bench",
    "run_task",
    "sigma_band",
    "sigma_points",
    "solve_with",
    "speedup_points",
    "speedup_report",
    "table1_report",
    "write_bench_outputs",
    "write_records",
]
