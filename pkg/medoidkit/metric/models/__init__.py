"""度量空间数据模型."""

from medoidkit.metric.models.dataset import Edge, VectorDataset, WeightedGraph
from medoidkit.metric.models.result import MedoidResult

__all__ = ["Edge", "VectorDataset", "WeightedGraph", "MedoidResult"]
