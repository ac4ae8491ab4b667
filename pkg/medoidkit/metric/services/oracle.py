"""距离预言机.

所有算法通过 ``DistanceOracle`` 获取距离，预言机负责统计代价：

    - ``eval_counter``: 标量距离计算次数
    - ``row_counter``: 完整距离行（一个"被计算元素"）的计算次数

计数器可以在多个工作线程中安全递增，但只有在算法阶段之间（无并发计算时）读取才有意义。
"""

import functools
import logging
import threading
from abc import ABC, abstractmethod
from typing import Sequence, Tuple, Union

import networkx as nx
import numpy as np

from medoidkit.infrastructure.exceptions import (
    DisconnectedGraphError,
    EmptyDatasetError,
    InvalidParameterError,
    UnreachableNodeError,
)
from medoidkit.infrastructure.utils.logger import LoggerMixin
from medoidkit.metric.models.dataset import VectorDataset, WeightedGraph

logger = logging.getLogger(__name__)


class DistanceOracle(ABC, LoggerMixin):
    """带计数器的距离预言机基类.

    子类实现 ``_row`` 与 ``_distances``，公共方法负责参数检查和计数。

    Attributes:
        symmetric: 距离是否对称（trimed 与 trikmeds 的边界推导需要对称性）
    """

    symmetric: bool = True

    def __init__(self, n: int) -> None:
        """初始化计数器.

        Args:
            n: 元素个数
        """
        self._n = n
        self._lock = threading.Lock()
        self._eval_counter = 0
        self._row_counter = 0

    @property
    def n(self) -> int:
        """元素个数."""
        return self._n

    @property
    def eval_counter(self) -> int:
        """标量距离计算次数."""
        return self._eval_counter

    @property
    def row_counter(self) -> int:
        """完整距离行计算次数."""
        return self._row_counter

    def counters(self) -> Tuple[int, int]:
        """返回 (eval_counter, row_counter) 快照."""
        with self._lock:
            return self._eval_counter, self._row_counter

    def reset_counters(self) -> None:
        """计数器清零."""
        with self._lock:
            self._eval_counter = 0
            self._row_counter = 0

    def _count(self, evals: int, rows: int = 0) -> None:
        with self._lock:
            self._eval_counter += evals
            self._row_counter += rows

    def _check_index(self, i: int) -> int:
        i = int(i)
        if not 0 <= i < self._n:
            raise InvalidParameterError(f"元素编号 {i} 超出范围 [0, {self._n})")
        return i

    def row(self, i: int) -> np.ndarray:
        """计算元素 i 到全部元素的距离.

        Args:
            i: 元素编号

        Returns:
            长度为 n 的距离数组
        """
        i = self._check_index(i)
        values = self._row(i)
        self._count(self._n, rows=1)
        return values

    def distance(self, i: int, j: int) -> float:
        """计算单个距离."""
        i = self._check_index(i)
        j = self._check_index(j)
        value = float(self._distances(i, np.array([j], dtype=np.intp))[0])
        self._count(1)
        return value

    def distances(self, i: int, targets: Union[Sequence[int], np.ndarray]) -> np.ndarray:
        """计算元素 i 到一组目标元素的距离，每个目标计一次.

        Args:
            i: 源元素编号
            targets: 目标元素编号

        Returns:
            与 targets 等长的距离数组
        """
        i = self._check_index(i)
        targets = np.asarray(targets, dtype=np.intp)
        if targets.size and (targets.min() < 0 or targets.max() >= self._n):
            raise InvalidParameterError(f"目标元素编号超出范围 [0, {self._n})")
        values = self._distances(i, targets)
        self._count(int(targets.size))
        return values

    def full_matrix(self) -> np.ndarray:
        """计算完整距离矩阵.

        Returns:
            形状为 (n, n) 的距离矩阵
        """
        matrix = np.vstack([self._row(i) for i in range(self._n)]) if self._n else np.zeros((0, 0))
        self._count(self._n * self._n, rows=self._n)
        return matrix

    @abstractmethod
    def _row(self, i: int) -> np.ndarray:
        """不计数地计算距离行."""

    @abstractmethod
    def _distances(self, i: int, targets: np.ndarray) -> np.ndarray:
        """不计数地计算到目标集合的距离."""


class EuclideanOracle(DistanceOracle):
    """欧氏向量空间上的预言机."""

    def __init__(self, dataset: VectorDataset) -> None:
        """初始化.

        Args:
            dataset: 向量数据集
        """
        super().__init__(dataset.n_points)
        self.dataset = dataset
        self._values = dataset.values

    def _row(self, i: int) -> np.ndarray:
        return np.linalg.norm(self._values - self._values[i], axis=1)

    def _distances(self, i: int, targets: np.ndarray) -> np.ndarray:
        return np.linalg.norm(self._values[targets] - self._values[i], axis=1)

    def full_matrix(self) -> np.ndarray:
        """完整距离矩阵，按每个无序对计算一次的约定计 n(n-1)/2 次.

        矩阵逐行由与 ``row`` 相同的公式得到，因此与逐个计算的距离逐位一致且严格对称。
        """
        n = self._n
        matrix = np.vstack([self._row(i) for i in range(n)]) if n else np.zeros((0, 0))
        self._count(n * (n - 1) // 2)
        return matrix


class GraphOracle(DistanceOracle):
    """图最短路度量上的预言机.

    每个距离行是一次 Dijkstra。对有向图，默认提供对称化视图
    d_sym(i, j) = (d(i, j) + d(j, i)) / 2，由原图与转置图各一次 Dijkstra 得到，
    但仍计作一个距离行；原始出向距离通过 ``directed_row`` 获取。

    ``distances`` 与 ``distance`` 复用最近 ``row_cache_size`` 个源的最短路行，计数仍按目标个数。
    """

    def __init__(
        self, graph: WeightedGraph, symmetrize: bool = True, validate: bool = True, row_cache_size: int = 64
    ) -> None:
        """初始化.

        Args:
            graph: 带权图
            symmetrize: 有向图是否使用对称化视图
            validate: 是否在构造时检查连通性
            row_cache_size: 缓存的源行个数，0 表示不缓存
        """
        if row_cache_size < 0:
            raise InvalidParameterError(f"row_cache_size 不能为负: {row_cache_size}")
        if graph.n_nodes == 0:
            raise EmptyDatasetError("图中没有节点")
        super().__init__(graph.n_nodes)
        if validate:
            validate_connectivity(graph)
        self.graph = graph
        self._nx = graph.to_networkx()
        self._reverse = self._nx.reverse(copy=False) if graph.directed else None
        self.symmetrize = symmetrize
        self.symmetric = (not graph.directed) or symmetrize
        self._cached_row = functools.lru_cache(maxsize=row_cache_size)(self._row)

    def _dijkstra(self, nx_graph: nx.Graph, source: int) -> np.ndarray:
        lengths = nx.single_source_dijkstra_path_length(nx_graph, source, weight="weight")
        if len(lengths) < self._n:
            missing = next(j for j in range(self._n) if j not in lengths)
            raise UnreachableNodeError(source, missing)
        row = np.empty(self._n, dtype=np.float64)
        row[np.fromiter(lengths.keys(), dtype=np.intp, count=len(lengths))] = np.fromiter(
            lengths.values(), dtype=np.float64, count=len(lengths)
        )
        return row

    def _row(self, i: int) -> np.ndarray:
        forward = self._dijkstra(self._nx, i)
        if self._reverse is not None and self.symmetrize:
            return (forward + self._dijkstra(self._reverse, i)) / 2.0
        return forward

    def _distances(self, i: int, targets: np.ndarray) -> np.ndarray:
        return self._cached_row(i)[targets]

    def directed_row(self, i: int) -> np.ndarray:
        """原始出向最短路距离行（无向图时与 ``row`` 相同）."""
        i = self._check_index(i)
        values = self._dijkstra(self._nx, i)
        self._count(self._n, rows=1)
        return values


def euclidean_row(oracle: EuclideanOracle, i: int) -> np.ndarray:
    """欧氏距离行：第 j 项为 ||x(i) - x(j)||，计 n 次距离和 1 个行."""
    if not isinstance(oracle, EuclideanOracle):
        raise InvalidParameterError("euclidean_row 需要 EuclideanOracle")
    return oracle.row(i)


def graph_row(oracle: GraphOracle, i: int) -> np.ndarray:
    """图距离行：第 j 项为 i 到 j 的最短路距离，计 n 次距离和 1 个行."""
    if not isinstance(oracle, GraphOracle):
        raise InvalidParameterError("graph_row 需要 GraphOracle")
    return oracle.row(i)


def validate_connectivity(graph: Union[WeightedGraph, nx.Graph]) -> None:
    """检查图是否连通（有向图检查强连通）.

    Args:
        graph: 带权图或 networkx 图

    Raises:
        EmptyDatasetError: 图中没有节点
        DisconnectedGraphError: 不连通，携带一对无路径的节点
    """
    nx_graph = graph.to_networkx() if isinstance(graph, WeightedGraph) else graph
    if nx_graph.number_of_nodes() == 0:
        raise EmptyDatasetError("图中没有节点")

    root = min(nx_graph.nodes)
    if nx_graph.is_directed():
        reachable = nx.descendants(nx_graph, root) | {root}
        unreached = sorted(set(nx_graph.nodes) - reachable)
        if unreached:
            raise DisconnectedGraphError((root, unreached[0]))
        reaching = nx.ancestors(nx_graph, root) | {root}
        unreaching = sorted(set(nx_graph.nodes) - reaching)
        if unreaching:
            raise DisconnectedGraphError((unreaching[0], root))
    else:
        component = nx.node_connected_component(nx_graph, root)
        outside = sorted(set(nx_graph.nodes) - component)
        if outside:
            raise DisconnectedGraphError((root, outside[0]))

    logger.debug(f"连通性检查通过: n_nodes={nx_graph.number_of_nodes()}")


def make_oracle(data: Union[VectorDataset, WeightedGraph], symmetrize: bool = True) -> DistanceOracle:
    """根据数据类型构造预言机.

    Args:
        data: 向量数据集或带权图
        symmetrize: 有向图是否使用对称化视图

    Returns:
        DistanceOracle: 对应的预言机
    """
    if isinstance(data, VectorDataset):
        if data.n_points == 0:
            raise EmptyDatasetError("数据集为空")
        return EuclideanOracle(data)
    if isinstance(data, WeightedGraph):
        return GraphOracle(data, symmetrize=symmetrize)
    raise InvalidParameterError(f"不支持的数据类型: {type(data).__name__}")
