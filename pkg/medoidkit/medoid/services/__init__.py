"""medoid 算法服务."""

from medoidkit.medoid.services.checks import EnergyBoundChecker
from medoidkit.medoid.services.ranking import (
    rand_anchor_count,
    rand_estimate,
    rand_medoid,
    toprank,
    toprank2,
    toprank_anchor_count,
)
from medoidkit.medoid.services.trimed import TrimedSolver, trimed, update_bounds

__all__ = [
    "TrimedSolver",
    "trimed",
    "update_bounds",
    "EnergyBoundChecker",
    "rand_estimate",
    "rand_medoid",
    "rand_anchor_count",
    "toprank",
    "toprank2",
    "toprank_anchor_count",
]
