"""K-medoids 状态与结果模型.

``ClusterState`` 的所有逐元素数组都按"位置"索引：``order[pos]`` 是位于该位置的
元素编号。重排（contiguate）之后，簇 k 占据位置区间 [V(k), V(k+1))，且该区间的
第一个位置是簇 k 的 medoid。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from medoidkit.metric.services.energy import exact_sum


@dataclass
class ClusterState:
    """trikmeds 的完整状态.

    Attributes:
        order: 位置到元素编号的映射
        a: 每个位置上元素的簇编号
        d: 每个位置上元素到所属簇 medoid 的距离
        lower_c: (n, K) 元素到各 medoid 距离的下界
        lower_s: 元素到同簇全部元素距离之和的下界
        v: 每个簇的元素个数
        V: 累计个数，长度 K+1，V[0] = 0
        s: 每个簇内元素到 medoid 的距离之和
        p: 每个簇的 medoid 在上一次更新中移动的距离
        medoids: 每个簇的 medoid 元素编号
        last_permutation: 最近一次重排使用的置换
    """

    order: np.ndarray
    a: np.ndarray
    d: np.ndarray
    lower_c: np.ndarray
    lower_s: np.ndarray
    v: np.ndarray
    V: np.ndarray
    s: np.ndarray
    p: np.ndarray
    medoids: np.ndarray
    last_permutation: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return int(self.order.shape[0])

    @property
    def K(self) -> int:
        return int(self.medoids.shape[0])

    def positions(self) -> np.ndarray:
        """元素编号到位置的映射（order 的逆置换）."""
        inverse = np.empty_like(self.order)
        inverse[self.order] = np.arange(self.n)
        return inverse

    def medoid_positions(self) -> np.ndarray:
        """各 medoid 当前所在的位置."""
        return self.positions()[self.medoids]

    def is_contiguous(self) -> bool:
        """簇是否连续排列且 medoid 位于各自区间之首."""
        starts = self.V[:-1]
        return bool(
            np.all(np.diff(self.a) >= 0)
            and np.array_equal(self.V, np.concatenate(([0], np.cumsum(self.v))))
            and np.all(self.order[starts[self.v > 0]] == self.medoids[self.v > 0])
        )

    def assignments_by_element(self) -> np.ndarray:
        """按元素编号排列的簇编号."""
        result = np.empty(self.n, dtype=np.intp)
        result[self.order] = self.a
        return result

    def distances_by_element(self) -> np.ndarray:
        """按元素编号排列的到所属 medoid 的距离."""
        result = np.empty(self.n, dtype=np.float64)
        result[self.order] = self.d
        return result

    def recount(self) -> None:
        """由 a 与 d 重新计算 v、V、s."""
        self.v = np.bincount(self.a, minlength=self.K).astype(np.intp)
        self.V = np.concatenate(([0], np.cumsum(self.v))).astype(np.intp)
        grouped = np.argsort(self.a, kind="stable")
        chunks = np.split(self.d[grouped], self.V[1:-1])
        self.s = np.array([exact_sum(chunk) for chunk in chunks], dtype=np.float64)


@dataclass
class FluxAccumulators:
    """一次分配轮次中各簇的进出统计.

    Attributes:
        n_in: 迁入元素个数
        n_out: 迁出元素个数
        s_in: 迁入元素到本簇 medoid 的距离之和
        s_out: 迁出元素到本簇 medoid 的距离之和
    """

    n_in: np.ndarray
    n_out: np.ndarray
    s_in: np.ndarray
    s_out: np.ndarray

    @classmethod
    def zeros(cls, K: int) -> "FluxAccumulators":
        return cls(
            n_in=np.zeros(K, dtype=np.intp),
            n_out=np.zeros(K, dtype=np.intp),
            s_in=np.zeros(K, dtype=np.float64),
            s_out=np.zeros(K, dtype=np.float64),
        )

    @property
    def n_moved(self) -> int:
        return int(self.n_in.sum())


@dataclass
class KMedoidsResult:
    """K-medoids 结果.

    Attributes:
        medoids: K 个 medoid 元素编号，下标即簇编号
        assignments: 按元素编号排列的簇编号
        objective: 目标函数 L(M) = Σ_i min_k dist(i, m(k))
        iterations: medoid 更新轮数
        distance_evals: 标量距离计算次数（不含计算目标函数的开销）
        algorithm: 算法名称
        epsilon: 松弛因子
        converged: 是否在 max_iters 之前收敛
        objective_history: 每轮分配后的 Σ d(i)
        empty_clusters: 出现空簇的次数
    """

    medoids: List[int]
    assignments: List[int]
    objective: float
    iterations: int
    distance_evals: int
    algorithm: str = ""
    epsilon: float = 0.0
    converged: bool = True
    objective_history: List[float] = field(default_factory=list)
    empty_clusters: int = 0

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典（不含逐元素分配）."""
        return {
            "medoids": list(self.medoids),
            "objective": self.objective,
            "iterations": self.iterations,
            "distance_evals": self.distance_evals,
            "algorithm": self.algorithm,
            "epsilon": self.epsilon,
            "converged": self.converged,
            "empty_clusters": self.empty_clusters,
        }
