"""trikmeds 运行时边界检查.

检查器持有独立计算的完整距离矩阵，适用于 n ≤ 2000 的实例。
"""

import numpy as np

from medoidkit.clustering.models.state import ClusterState
from medoidkit.infrastructure.exceptions import BoundViolationError
from medoidkit.infrastructure.utils.logger import LoggerMixin
from medoidkit.metric.services.oracle import DistanceOracle


class ClusterBoundChecker(LoggerMixin):
    """检查 l_c、l_s 下界，以及分配与 medoid 的 (1+ε) 约定.

    Args:
        matrix: 按元素编号索引的参考距离矩阵
        tolerance: 相对容差，以矩阵最大值为尺度
    """

    def __init__(self, matrix: np.ndarray, tolerance: float = 1e-9) -> None:
        self.matrix = np.asarray(matrix, dtype=np.float64)
        self.tolerance = tolerance
        self.scale = float(self.matrix.max()) if self.matrix.size else 0.0
        self.n_checks = 0

    @classmethod
    def from_oracle(cls, reference_oracle: DistanceOracle, tolerance: float = 1e-9) -> "ClusterBoundChecker":
        """在给定（独立的）预言机上计算参考矩阵."""
        return cls(reference_oracle.full_matrix(), tolerance=tolerance)

    def _center_distances(self, state: ClusterState) -> np.ndarray:
        return self.matrix[np.ix_(state.order, state.medoids)]

    def _in_cluster_sums(self, state: ClusterState) -> np.ndarray:
        a_by_element = state.assignments_by_element()
        same = a_by_element[state.order][:, None] == a_by_element[None, :]
        return np.where(same, self.matrix[state.order], 0.0).sum(axis=1)

    def check_center_bounds(self, state: ClusterState) -> None:
        """l_c(i, k) ≤ dist(i, m(k))."""
        true = self._center_distances(state)
        violated = np.argwhere(state.lower_c > true + self.tolerance * self.scale)
        if violated.size:
            pos, k = (int(x) for x in violated[0])
            raise BoundViolationError("center", int(state.order[pos]), float(state.lower_c[pos, k]), float(true[pos, k]))

    def check_sum_bounds(self, state: ClusterState) -> None:
        """l_s(i) ≤ Σ_{i' 同簇} dist(i', i)."""
        true = self._in_cluster_sums(state)
        violated = np.flatnonzero(state.lower_s > true + self.tolerance * self.scale * state.n)
        if violated.size:
            pos = int(violated[0])
            raise BoundViolationError("sum", int(state.order[pos]), float(state.lower_s[pos]), float(true[pos]))

    def check_assignment(self, state: ClusterState, epsilon: float = 0.0) -> None:
        """d(i) 是到所属 medoid 的距离，且 d(i) ≤ (1+ε)·min_k dist(i, m(k))."""
        true = self._center_distances(state)
        slack = self.tolerance * self.scale
        assigned = true[np.arange(state.n), state.a]
        wrong = np.flatnonzero(np.abs(state.d - assigned) > slack)
        if wrong.size:
            pos = int(wrong[0])
            raise BoundViolationError("assigned_distance", int(state.order[pos]), float(state.d[pos]), float(assigned[pos]))
        nearest = true.min(axis=1)
        loose = np.flatnonzero(state.d > (1.0 + epsilon) * nearest + slack)
        if loose.size:
            pos = int(loose[0])
            raise BoundViolationError("assignment", int(state.order[pos]), float(state.d[pos]), float(nearest[pos]))

    def check_medoids(self, state: ClusterState, epsilon: float = 0.0) -> None:
        """s(k) ≤ (1+ε)·簇内最小距离和."""
        sums = self._in_cluster_sums(state)
        slack = self.tolerance * self.scale * state.n
        for k in range(state.K):
            lo, hi = int(state.V[k]), int(state.V[k + 1])
            if hi == lo:
                continue
            best = float(sums[lo:hi].min())
            if state.s[k] > (1.0 + epsilon) * best + slack:
                raise BoundViolationError("medoid", int(state.medoids[k]), float(state.s[k]), best)

    def after_initialise(self, state: ClusterState) -> None:
        self.check_center_bounds(state)
        self.check_sum_bounds(state)
        self.check_assignment(state)
        self.n_checks += 1

    def after_update_medoids(self, state: ClusterState, epsilon: float = 0.0) -> None:
        self.check_sum_bounds(state)
        self.check_medoids(state, epsilon)
        self.n_checks += 1

    def after_update_sum_bounds(self, state: ClusterState, epsilon: float = 0.0) -> None:
        self.check_center_bounds(state)
        self.check_sum_bounds(state)
        self.check_assignment(state, epsilon)
        self.n_checks += 1
