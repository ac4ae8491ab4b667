"""medoid 算法数据模型."""

from medoidkit.medoid.models.bounds import BoundState, TrimedConfig
from medoidkit.medoid.models.estimates import EnergyEstimates, RankingResult, TopRankParams

__all__ = ["BoundState", "TrimedConfig", "EnergyEstimates", "TopRankParams", "RankingResult"]
