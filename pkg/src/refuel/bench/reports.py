"""Aggregates over bench records: speedup by size, hardness, sigma-band timings."""

from collections import defaultdict

import numpy as np
from scipy import stats

from refuel.models.bench import (
    BenchRecord,
    BenchStatus,
    HardnessReport,
    HardnessRow,
    SpeedupReport,
    SpeedupRow,
    Table1Row,
)

ELAPSED_FLOOR = 1e-9
MIN_CORRELATION_POINTS = 3
MARKER_OMITTED = "omitted"
MARKER_UNDEFINED = "undefined"


def speedup_report(records: list[BenchRecord], baseline: str = "astar", candidate: str = "fast") -> SpeedupReport:
    """Per-size geometric mean of baseline time over candidate time.

    Only instances run with both algorithms count; an instance where either
    run is not ok is excluded and tallied. Elapsed times below 1e-9 s are
    raised to 1e-9 s.
    """
    by_instance: dict[str, dict[str, BenchRecord]] = defaultdict(dict)
    for record in records:
        if record.algo in (baseline, candidate):
            by_instance[record.instance][record.algo] = record

    report = SpeedupReport()
    pairs: dict[int, list[tuple[float, float]]] = defaultdict(list)
    for runs in by_instance.values():
        if len(runs) < 2:
            continue
        fast, slow = runs[candidate], runs[baseline]
        if fast.status is not BenchStatus.OK or slow.status is not BenchStatus.OK:
            report.excluded += 1
            continue
        pairs[fast.n].append((max(fast.elapsed, ELAPSED_FLOOR), max(slow.elapsed, ELAPSED_FLOOR)))

    for n in sorted(pairs):
        times = np.array(pairs[n])
        ratio = float(stats.gmean(times[:, 1] / times[:, 0]))
        report.rows.append(SpeedupRow(n, len(times), float(times[:, 0].mean()), float(times[:, 1].mean()), ratio))
    return report


def hardness_report(records: list[BenchRecord], algo: str = "fast") -> HardnessReport:
    """Per-instance (sigma, K, elapsed) and the Spearman correlation of log K and log elapsed.

    With fewer than 3 rows the correlation is omitted. When K or elapsed is
    the same on every row the rank correlation is undefined and left as None.
    """
    rows = [
        HardnessRow(r.instance, r.sigma, r.leaves, r.elapsed)
        for r in records
        if r.algo == algo and r.status is BenchStatus.OK and r.leaves is not None
    ]
    report = HardnessReport(rows)
    if len(rows) < MIN_CORRELATION_POINTS:
        report.marker = MARKER_OMITTED
        return report
    log_k = np.log([row.leaves for row in rows])
    log_t = np.log([max(row.elapsed, ELAPSED_FLOOR) for row in rows])
    if np.all(log_k == log_k[0]) or np.all(log_t == log_t[0]):
        report.marker = MARKER_UNDEFINED
        return report
    report.correlation = float(stats.spearmanr(log_k, log_t).statistic)
    return report


def sigma_band(sigma: float, width: float = 0.1) -> tuple[float, float]:
    """Half-open band [lo, lo + width) containing sigma; sigma = 1.0 joins the band below."""
    thousandths = round(sigma * 1000)
    step = round(width * 1000)
    lo = thousandths // step * step
    if thousandths == 1000 and lo == thousandths:
        lo -= step
    return lo / 1000, (lo + step) / 1000


def table1_report(records: list[BenchRecord], algo: str = "fast", width: float = 0.1) -> list[Table1Row]:
    """Average and population std of solve time per (n, sigma band), plus solved share.

    Timed-out runs are left out of avg and std but count towards the band's
    instances; skipped runs are ignored.
    """
    cells: dict[tuple[int, tuple[float, float]], list[BenchRecord]] = defaultdict(list)
    for record in records:
        if record.algo == algo and record.status is not BenchStatus.SKIPPED:
            cells[(record.n, sigma_band(record.sigma, width))].append(record)

    rows = []
    for (n, (lo, hi)), cell in sorted(cells.items()):
        solved = np.array([r.elapsed for r in cell if r.status is BenchStatus.OK])
        avg = float(solved.mean()) if solved.size else None
        std = float(solved.std(ddof=0)) if solved.size else None
        rows.append(Table1Row(n, lo, hi, len(cell), int(solved.size), avg, std))
    return rows


def speedup_points(report: SpeedupReport) -> list[tuple[int, float]]:
    return [(row.n, row.ratio) for row in report.rows]


def hardness_points(report: HardnessReport) -> list[tuple[int, float]]:
    return [(row.leaves, row.elapsed) for row in report.rows]


def sigma_points(report: HardnessReport) -> list[tuple[float, int]]:
    return [(row.sigma, row.leaves) for row in report.rows]

