"""refuelkit data models."""

from refuel.models.bench import (
    BenchRecord,
    BenchStatus,
    HardnessReport,
    HardnessRow,
    SpeedupReport,
    SpeedupRow,
    Table1Row,
)
from refuel.models.generation import DatasetKind, GenSpec, ManifestEntry
from refuel.models.instance import Instance, InstanceMeta, Job, NumericMode, Schedule
from refuel.models.relation import (
    BannedSet,
    CutGrid,
    PairRelation,
    RelationKind,
    ValidationResult,
    Violation,
    ViolationReason,
)
from refuel.models.report import SolveReport

__all__ = [
    "BannedSet",
    "BenchRecord",
    "BenchStatus",
    "CutGrid",
    "DatasetKind",
    "GenSpec",
    "HardnessReport",
    "HardnessRow",
    "Instance",
    "InstanceMeta",
    "Job",
    "ManifestEntry",
    "NumericMode",
    "PairRelation",
    "RelationKind",
    "Schedule",
    "SolveReport",
    "SpeedupReport",
    "SpeedupRow",
    "Table1Row",
    "ValidationResult",
    "Violation",
    "ViolationReason",
]
