"""Pairwise dominance classification.

Every comparison of φ values goes through the linear form
D(t) = c + s·t with s = w_i p_j - w_j p_i and c = w_i p_j² - w_j p_i²,
whose sign equals the sign of φ_i(t) - φ_j(t). No divisions are needed
except for the crossover point itself.
"""

from collections.abc import Iterable

from refuel.models.instance import Job, Number, NumericMode
from refuel.models.relation import PairRelation, RelationKind


def sign(value: Number) -> int:
    return (value > 0) - (value < 0)


def linear_form(i: Job, j: Job, mode: NumericMode = NumericMode.FAST) -> tuple[Number, Number]:
    """Coefficients (c, s) of D(t) = c + s·t for the ordered pair (i, j)."""
    wi, wj = mode.coerce(i.w), mode.coerce(j.w)
    s = wi * j.p - wj * i.p
    c = wi * j.p * j.p - wj * i.p * i.p
    return c, s


def classify_pair(i: Job, j: Job, mode: NumericMode = NumericMode.FAST) -> PairRelation:
    """Classify how φ_i and φ_j compare on [0, ∞).

    D >= 0 everywhere (not identically zero) gives FIRST_DOMINATES, the mirror
    case SECOND_DOMINATES, D ≡ 0 EQUIVALENT. Otherwise the lines cross at
    tstar = -c/s > 0 and the job ahead at t = 0 is dominant_before.
    """
    c, s = linear_form(i, j, mode)
    if c == 0 and s == 0:
        return PairRelation(RelationKind.EQUIVALENT, i.id, j.id, c, s)
    if c >= 0 and s >= 0:
        return PairRelation(RelationKind.FIRST_DOMINATES, i.id, j.id, c, s)
    if c <= 0 and s <= 0:
        return PairRelation(RelationKind.SECOND_DOMINATES, i.id, j.id, c, s)
    dominant_before = i.id if c > 0 else j.id
    return PairRelation(RelationKind.CROSSOVER, i.id, j.id, c, s, -c / s, dominant_before)


class RelationTable:
    """Lazily computed pair relations of one job set.

    Each unordered pair is classified at most once; both orientations are
    cached then, so reverse lookups are plain dict hits.
    """

    def __init__(self, jobs: Iterable[Job], mode: NumericMode = NumericMode.FAST):
        self.jobs = {job.id: job for job in jobs}
        self.mode = mode
        self._cache: dict[tuple[int, int], PairRelation] = {}
        self._forms: dict[tuple[int, int], tuple[Number, Number]] = {}

    def _classify(self, i: int, j: int) -> None:
        lo, hi = (i, j) if i < j else (j, i)
        relation = classify_pair(self.jobs[lo], self.jobs[hi], self.mode)
        self._cache[lo, hi] = relation
        self._cache[hi, lo] = relation.mirrored()
        self._forms[lo, hi] = (relation.c, relation.s)
        self._forms[hi, lo] = (-relation.c, -relation.s)

    def get(self, i: int, j: int) -> PairRelation:
        """Relation of the ordered pair (i, j) by job id."""
        relation = self._cache.get((i, j))
        if relation is None:
            self._classify(i, j)
            relation = self._cache[i, j]
        return relation

    def diff_sign(self, i: int, j: int, t: Number) -> int:
        """Sign of φ_i(t) - φ_j(t)."""
        form = self._forms.get((i, j))
        if form is None:
            self._classify(i, j)
            form = self._forms[i, j]
        value = form[0] + form[1] * t
        return (value > 0) - (value < 0)

    def __len__(self) -> int:
        """Number of unordered pairs classified so far."""
        return len(self._cache) // 2


def outranks(table: RelationTable, a: int, b: int, t_o: Number, t_e: Number) -> bool:
    """Whether job a is preferred over job b as the pivot of window [t_o, t_e).

    Larger φ(t_o) wins; ties go to the larger φ(t_e), then to the smaller id.
    """
    at_start = table.diff_sign(a, b, t_o)
    if at_start:
        return at_start > 0
    at_end = table.diff_sign(a, b, t_e)
    if at_end:
        return at_end > 0
    return a < b
