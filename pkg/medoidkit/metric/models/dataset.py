"""数据集模型.

定义向量数据集和带权图两种度量空间载体。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from medoidkit.infrastructure.exceptions import InvalidParameterError

Edge = Tuple[int, int, float]


@dataclass
class VectorDataset:
    """向量数据集.

    Attributes:
        values: 形状为 (n_points, dim) 的行主序 float64 坐标矩阵
        source: 数据来源（文件路径或生成器描述）
        metadata: 其他元数据
    """

    values: np.ndarray
    source: str = ""
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """校验形状与有限性."""
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2:
            raise InvalidParameterError(f"坐标矩阵必须是二维的，实际维数 {values.ndim}")
        if not np.all(np.isfinite(values)):
            raise InvalidParameterError("坐标中存在非有限值")
        self.values = values

    @property
    def n_points(self) -> int:
        """点数."""
        return int(self.values.shape[0])

    @property
    def dim(self) -> int:
        """维数."""
        return int(self.values.shape[1])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], source: str = "") -> "VectorDataset":
        """从行列表构造数据集.

        Args:
            rows: 每行一个点
            source: 数据来源

        Returns:
            VectorDataset: 数据集实例
        """
        return cls(values=np.asarray(rows, dtype=np.float64), source=source)


@dataclass
class WeightedGraph:
    """带非负权重的图.

    Attributes:
        n_nodes: 节点数，节点编号为 [0, n_nodes)
        edges: 边列表 (source, target, weight)
        directed: 是否为有向图
        coordinates: 节点坐标（生成的传感器图保留，用于检查）
        metadata: 其他元数据（例如生成时的重试次数）
    """

    n_nodes: int
    edges: List[Edge] = field(default_factory=list)
    directed: bool = False
    coordinates: Optional[np.ndarray] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """校验节点编号与权重."""
        if self.n_nodes < 0:
            raise InvalidParameterError(f"节点数不能为负: {self.n_nodes}")
        for u, v, w in self.edges:
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise InvalidParameterError(f"边 ({u}, {v}) 的节点编号超出范围 [0, {self.n_nodes})")
            if not np.isfinite(w) or w < 0:
                raise InvalidParameterError(f"边 ({u}, {v}) 的权重必须是非负有限值: {w}")

    @property
    def n_edges(self) -> int:
        """边数."""
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        """转换为 networkx 图，重复边保留最小权重.

        Returns:
            nx.Graph 或 nx.DiGraph
        """
        graph: nx.Graph = nx.DiGraph() if self.directed else nx.Graph()
        graph.add_nodes_from(range(self.n_nodes))
        for u, v, w in self.edges:
            if graph.has_edge(u, v) and graph[u][v]["weight"] <= w:
                continue
            graph.add_edge(u, v, weight=float(w))
        return graph
