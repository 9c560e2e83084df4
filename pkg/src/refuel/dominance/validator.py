"""Potential-schedule validator.

An order is a potential schedule when no ordered pair (i before j) breaks
its dominance relation:

- j dominates i on all of [0, ∞)                         -> global-dominance
- i leads until t* and i starts at or after t*           -> crossover-late-start
- j leads until t* and j's window end t_j - p_i is < t*  -> crossover-early-window

Equivalent pairs never violate.
"""

from collections.abc import Sequence

from refuel.core.schedule import check_permutation, start_times
from refuel.dominance.rules import RelationTable
from refuel.models.instance import Instance, Number, NumericMode
from refuel.models.relation import PairRelation, RelationKind, ValidationResult, Violation, ViolationReason


def pair_violation(relation: PairRelation, t_i: Number, t_j: Number, p_i: int) -> ViolationReason | None:
    """Reason why relation.first running at t_i before relation.second at t_j is not allowed."""
    if relation.kind is RelationKind.SECOND_DOMINATES:
        return ViolationReason.GLOBAL_DOMINANCE
    if relation.kind is not RelationKind.CROSSOVER:
        return None
    if relation.dominant_before == relation.first:
        if t_i >= relation.tstar:
            return ViolationReason.CROSSOVER_LATE_START
    elif t_j - p_i < relation.tstar:
        return ViolationReason.CROSSOVER_EARLY_WINDOW
    return None


def is_potential(
    instance: Instance,
    order: Sequence[int],
    mode: NumericMode = NumericMode.FAST,
    table: RelationTable | None = None,
) -> ValidationResult:
    """Check every ordered pair of an order started at time 0.

    Raises:
        MalformedPermutationError: If order is not a permutation of the job ids
    """
    check_permutation(order, instance.n)
    table = table if table is not None else RelationTable(instance.jobs, mode)
    starts = start_times(instance, order)
    result = ValidationResult()
    for pos, i in enumerate(order):
        p_i = instance.jobs[i].p
        for j in order[pos + 1 :]:
            reason = pair_violation(table.get(i, j), starts[i], starts[j], p_i)
            if reason is not None:
                result.violations.append(Violation(i, j, reason))
    return result
