"""Banned start intervals and the cut grid of a pivot job."""

from collections.abc import Sequence

from refuel.dominance.rules import RelationTable
from refuel.exceptions import WindowError
from refuel.models.instance import Job, Number, NumericMode
from refuel.models.relation import BannedSet, CutGrid, RelationKind


def _table_for(jobs: Sequence[Job], mode: NumericMode, table: RelationTable | None) -> RelationTable:
    return table if table is not None else RelationTable(jobs, mode)


def banned_set(
    alpha: Job,
    others: Sequence[Job],
    mode: NumericMode = NumericMode.FAST,
    horizon: Number | None = None,
    table: RelationTable | None = None,
) -> BannedSet:
    """Union of [t*_αj, t*_αj + p_j) over jobs j that alpha leads until a crossover.

    No potential schedule starts alpha inside any of these intervals. With a
    horizon, only crossovers with t* in (0, horizon) contribute.
    """
    table = _table_for([alpha, *others], mode, table)
    intervals: list[tuple[Number, Number]] = []
    for job in others:
        relation = table.get(alpha.id, job.id)
        if relation.kind is not RelationKind.CROSSOVER or relation.dominant_before != alpha.id:
            continue
        if relation.tstar <= 0 or (horizon is not None and relation.tstar >= horizon):
            continue
        intervals.append((relation.tstar, relation.tstar + job.p))
    return BannedSet.from_intervals(alpha.id, intervals)


def cut_grid(
    alpha: Job,
    window_jobs: Sequence[Job],
    t_o: Number,
    t_e: Number,
    mode: NumericMode = NumericMode.FAST,
    table: RelationTable | None = None,
) -> CutGrid:
    """Cut points of [t_o, t_e] for pivot alpha and the rank of every window job.

    A job j gets the rank of its cut t*_αj + p_j when alpha leads j until a
    crossover inside (t_o, t_e) and the cut itself lies inside (t_o, t_e).
    Every other job ranks |J'| + 1 and always follows alpha. Crossovers exactly
    at t_o or t_e emit no cut. Equal cuts share one grid point and rank.

    Raises:
        WindowError: If alpha is not in the window or t_e != t_o + Σ p
    """
    if all(job.id != alpha.id for job in window_jobs):
        raise WindowError(f"pivot job {alpha.id} is not part of the window")
    expected_end = t_o + sum(job.p for job in window_jobs)
    if t_e != expected_end:
        raise WindowError(f"t_e = {t_e} but t_o + Σp = {expected_end}")

    table = _table_for(window_jobs, mode, table)
    cut_of: dict[int, Number] = {}
    for job in window_jobs:
        if job.id == alpha.id:
            continue
        relation = table.get(alpha.id, job.id)
        if relation.kind is not RelationKind.CROSSOVER or relation.dominant_before != alpha.id:
            continue
        if not t_o < relation.tstar < t_e:
            continue
        cut = relation.tstar + job.p
        if t_o < cut < t_e:
            cut_of[job.id] = cut

    cuts = tuple(sorted({t_o, t_e, *cut_of.values()}))
    position = {value: q for q, value in enumerate(cuts, start=1)}
    outside = len(window_jobs) + 1
    rank_of = {job.id: outside for job in window_jobs}
    rank_of[alpha.id] = 1
    for job_id, cut in cut_of.items():
        rank_of[job_id] = position[cut]
    return CutGrid(alpha.id, t_o, t_e, cuts, rank_of)
