"""基准测试模型."""

from medoidkit.bench.models.records import (
    CSV_SCHEMA_VERSION,
    INIT_METHODS,
    KMEDOIDS_ALGORITHMS,
    MEDOID_ALGORITHMS,
    KMedoidsRunConfig,
    MedoidRunConfig,
    RunRecord,
    SweepSpec,
)

__all__ = [
    "RunRecord",
    "SweepSpec",
    "MedoidRunConfig",
    "KMedoidsRunConfig",
    "MEDOID_ALGORITHMS",
    "KMEDOIDS_ALGORITHMS",
    "INIT_METHODS",
    "CSV_SCHEMA_VERSION",
]
