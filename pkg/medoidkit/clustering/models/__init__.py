"""K-medoids 数据模型."""

from medoidkit.clustering.models.state import ClusterState, FluxAccumulators, KMedoidsResult

__all__ = ["ClusterState", "FluxAccumulators", "KMedoidsResult"]
