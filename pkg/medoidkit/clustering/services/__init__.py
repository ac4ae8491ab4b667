"""K-medoids 服务."""

from medoidkit.clustering.services.checks import ClusterBoundChecker
from medoidkit.clustering.services.initializers import init_park, init_uniform, validate_init
from medoidkit.clustering.services.kmeds import kmeds
from medoidkit.clustering.services.trikmeds import (
    TrikmedsSolver,
    assign_to_clusters,
    contiguate,
    initialise,
    kmedoids_objective,
    trikmeds,
    update_medoids,
    update_sum_bounds,
)

__all__ = [
    "ClusterBoundChecker",
    "init_uniform",
    "init_park",
    "validate_init",
    "kmeds",
    "trikmeds",
    "TrikmedsSolver",
    "initialise",
    "update_medoids",
    "assign_to_clusters",
    "update_sum_bounds",
    "contiguate",
    "kmedoids_objective",
]
