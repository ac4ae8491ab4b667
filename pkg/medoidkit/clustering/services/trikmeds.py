"""trikmeds-ε：用三角不等式下界加速的 K-medoids.

每轮依次执行 medoid 更新、分配与簇内距离和下界修正：

    - l_c(i, k) 维护元素到各 medoid 距离的下界，medoid 移动 p(k) 后整体减去 p(k)
    - l_s(i) 维护元素到同簇全部元素距离之和的下界，按 trimed 的方式收紧，
      分配后用进出簇的统计量修正
    - ε > 0 时两处下界检验都放宽为 bound·(1+ε) < 当前值

ε = 0 时与 KMEDS 从相同初始 medoid 出发得到相同的 medoid、分配、目标值与迭代轮数。
"""

import logging
from typing import Optional, Sequence

import numpy as np

from medoidkit.clustering.models.state import ClusterState, FluxAccumulators, KMedoidsResult
from medoidkit.clustering.services.checks import ClusterBoundChecker
from medoidkit.clustering.services.initializers import init_uniform, validate_init
from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.infrastructure.utils.logger import LoggerMixin
from medoidkit.metric.services.energy import exact_sum
from medoidkit.metric.services.oracle import DistanceOracle

logger = logging.getLogger(__name__)

ROUNDING_SLACK = 1e-12


def contiguate(state: ClusterState) -> np.ndarray:
    """原地重排，使簇 k 占据 [V(k), V(k+1))，medoid 位于区间之首，其余按元素编号升序.

    Args:
        state: 聚类状态，a、v、V 必须一致

    Returns:
        np.ndarray: 本次使用的置换（新位置 -> 旧位置），已连续时为恒等置换
    """
    is_medoid = np.zeros(state.n, dtype=bool)
    is_medoid[state.medoid_positions()] = True
    permutation = np.lexsort((state.order, ~is_medoid, state.a))

    state.order = state.order[permutation]
    state.a = state.a[permutation]
    state.d = state.d[permutation]
    state.lower_c = state.lower_c[permutation]
    state.lower_s = state.lower_s[permutation]
    state.last_permutation = permutation
    return permutation


def initialise(oracle: DistanceOracle, medoids: Sequence[int]) -> ClusterState:
    """计算全部 N·K 个元素到 medoid 的距离，建立初始状态.

    每个元素分配到最近的 medoid（平局取最小簇编号），medoid 固定在自己的簇中。
    """
    n = oracle.n
    medoids = validate_init(n, len(medoids), medoids)
    K = medoids.size

    lower_c = np.empty((n, K), dtype=np.float64)
    for k, m in enumerate(medoids):
        lower_c[:, k] = oracle.row(int(m))

    a = np.argmin(lower_c, axis=1).astype(np.intp)
    a[medoids] = np.arange(K)
    d = lower_c[np.arange(n), a]

    state = ClusterState(
        order=np.arange(n, dtype=np.intp),
        a=a,
        d=d,
        lower_c=lower_c,
        lower_s=np.zeros(n, dtype=np.float64),
        v=np.zeros(K, dtype=np.intp),
        V=np.zeros(K + 1, dtype=np.intp),
        s=np.zeros(K, dtype=np.float64),
        p=np.zeros(K, dtype=np.float64),
        medoids=medoids.copy(),
    )
    state.recount()
    state.lower_s[medoids] = state.s
    contiguate(state)
    return state


def update_medoids(state: ClusterState, oracle: DistanceOracle, epsilon: float = 0.0) -> ClusterState:
    """逐簇更新 medoid.

    簇内元素只有在 l_s(i)·(1+ε) < s(k) 时才计算到同簇全部元素的距离；计算后 l_s(i) 取精确值，
    并用 |d̃(i′)·v(k) - l_s(i)| 抬高同簇其他元素的下界。距离和严格更小的候选成为新 medoid，
    同时刷新 s(k) 与簇内 d；medoid 移动时 p(k) 取新旧 medoid 之间的距离，否则为 0。

    Args:
        state: 已重排的聚类状态
        oracle: 距离预言机
        epsilon: 松弛因子

    Returns:
        ClusterState: 原地更新后的状态
    """
    factor = 1.0 + epsilon
    lower_s = state.lower_s
    p = np.zeros(state.K, dtype=np.float64)

    for k in range(state.K):
        lo, hi = int(state.V[k]), int(state.V[k + 1])
        if hi == lo:
            logger.warning(f"簇 {k} 为空，保留 medoid {int(state.medoids[k])}")
            continue
        members = state.order[lo:hi]
        size = hi - lo
        best_sum = float(state.s[k])
        best_pos = lo
        segment = lower_s[lo:hi]

        for pos in range(lo, hi):
            if not lower_s[pos] * factor < best_sum:
                continue
            distances = oracle.distances(int(state.order[pos]), members)
            total = exact_sum(distances)
            lower_s[pos] = total
            if total < best_sum:
                best_sum = total
                best_pos = pos
                state.d[lo:hi] = distances
            np.maximum(segment, np.abs(distances * size - total), out=segment)

        state.s[k] = best_sum
        if best_pos != lo:
            state.medoids[k] = state.order[best_pos]
            p[k] = state.d[lo]

    state.p = p
    return state


def assign_to_clusters(state: ClusterState, oracle: DistanceOracle, epsilon: float = 0.0) -> FluxAccumulators:
    """把元素分配到最近的 medoid，用 l_c 下界跳过不必要的距离计算.

    先按 p(k) 降低 l_c，再把 l_c(i, a(i)) 刷新为 d(i)。只有 l_c(i, k)·(1+ε) < d(i) 时才计算
    dist(i, m(k))（簇编号更小时允许相等，以保持最小簇编号的平局规则）。medoid 固定在自己的簇中。

    Args:
        state: 聚类状态，p(k) 已知
        oracle: 距离预言机
        epsilon: 松弛因子

    Returns:
        FluxAccumulators: 本轮的进出统计
    """
    factor = 1.0 + epsilon
    n, K = state.n, state.K
    rows = np.arange(n)

    moved_medoids = np.flatnonzero(state.p > 0)
    if moved_medoids.size:
        shifted = state.lower_c[:, moved_medoids]
        p = state.p[moved_medoids]
        # l - p 的舍入误差可能使下界高于新距离（三点共线时），按相对量级留出余量
        state.lower_c[:, moved_medoids] = shifted - p - ROUNDING_SLACK * (np.abs(shifted) + p)
    state.lower_c[rows, state.a] = state.d

    a_old = state.a.copy()
    d_old = state.d.copy()
    movable = np.ones(n, dtype=bool)
    movable[state.medoid_positions()] = False

    for k in range(K):
        relaxed = state.lower_c[:, k] * factor
        needed = movable & (state.a != k) & ((relaxed < state.d) | ((relaxed <= state.d) & (k < state.a)))
        idx = np.flatnonzero(needed)
        if idx.size == 0:
            continue
        distances = oracle.distances(int(state.medoids[k]), state.order[idx])
        state.lower_c[idx, k] = distances
        current = state.d[idx]
        better = (distances < current) | ((distances == current) & (k < state.a[idx]))
        moved = idx[better]
        state.a[moved] = k
        state.d[moved] = distances[better]

    fluxes = FluxAccumulators.zeros(K)
    changed = np.flatnonzero(state.a != a_old)
    if changed.size:
        np.add.at(fluxes.n_in, state.a[changed], 1)
        np.add.at(fluxes.n_out, a_old[changed], 1)
        np.add.at(fluxes.s_in, state.a[changed], state.d[changed])
        np.add.at(fluxes.s_out, a_old[changed], d_old[changed])
        state.lower_s[changed] = 0.0

    state.recount()
    contiguate(state)
    return fluxes


def update_sum_bounds(state: ClusterState, fluxes: FluxAccumulators) -> ClusterState:
    """用进出簇的绝对与净通量修正 l_s，结果截断到 0 以上.

    l_s(i) ← max(0, l_s(i) - min(J_abs_s - J_net_n·d(i), J_abs_n·d(i) - J_net_s))
    """
    abs_s = fluxes.s_in + fluxes.s_out
    net_s = fluxes.s_in - fluxes.s_out
    abs_n = (fluxes.n_in + fluxes.n_out).astype(np.float64)
    net_n = (fluxes.n_in - fluxes.n_out).astype(np.float64)

    a, d = state.a, state.d
    correction = np.minimum(abs_s[a] - net_n[a] * d, abs_n[a] * d - net_s[a])
    state.lower_s = np.maximum(0.0, state.lower_s - correction)
    return state


def kmedoids_objective(oracle: DistanceOracle, medoids: Sequence[int]) -> float:
    """精确计算 L(M) = Σ_i min_k dist(i, m(k))，每个元素与 medoid 计一次距离."""
    everyone = np.arange(oracle.n)
    nearest = np.full(oracle.n, np.inf)
    for m in medoids:
        np.minimum(nearest, oracle.distances(int(m), everyone), out=nearest)
    return exact_sum(nearest)


class TrikmedsSolver(LoggerMixin):
    """trikmeds-ε 求解器.

    Attributes:
        state: 最近一次运行结束时的聚类状态
    """

    def __init__(
        self,
        oracle: DistanceOracle,
        epsilon: float = 0.0,
        max_iters: int = 10_000,
        checker: Optional[ClusterBoundChecker] = None,
    ) -> None:
        if not epsilon >= 0.0:
            raise InvalidParameterError(f"epsilon 必须非负: {epsilon}")
        if max_iters < 1:
            raise InvalidParameterError(f"max_iters 必须至少为 1: {max_iters}")
        if not oracle.symmetric:
            raise InvalidParameterError("trikmeds 需要对称距离，有向图请使用对称化视图")
        self.oracle = oracle
        self.epsilon = epsilon
        self.max_iters = max_iters
        self.checker = checker
        self.state: Optional[ClusterState] = None

    def fit(self, init: Sequence[int]) -> KMedoidsResult:
        """从给定初始 medoid 开始迭代到 medoid 集合不再变化或达到 max_iters.

        Args:
            init: K 个初始 medoid 元素编号

        Returns:
            KMedoidsResult: ε = 0 时目标值为 Σ d(i)，否则为精确的 L(M)
        """
        evals_before = self.oracle.eval_counter
        state = initialise(self.oracle, init)
        self.state = state
        if self.checker is not None:
            self.checker.after_initialise(state)

        history = [exact_sum(state.d)]
        iterations = 0
        converged = False
        empty_clusters = 0

        while iterations < self.max_iters:
            previous = state.medoids.copy()
            empty_clusters += int(np.count_nonzero(state.v == 0))
            update_medoids(state, self.oracle, self.epsilon)
            iterations += 1
            if self.checker is not None:
                self.checker.after_update_medoids(state, self.epsilon)
            if np.array_equal(previous, state.medoids):
                converged = True
                break

            fluxes = assign_to_clusters(state, self.oracle, self.epsilon)
            update_sum_bounds(state, fluxes)
            history.append(exact_sum(state.d))
            if self.checker is not None:
                self.checker.after_update_sum_bounds(state, self.epsilon)
            self.logger.debug(
                f"trikmeds 第 {iterations} 轮: moved={fluxes.n_moved}, objective={history[-1]:.6g}, "
                f"evals={self.oracle.eval_counter - evals_before}"
            )

        distance_evals = self.oracle.eval_counter - evals_before
        medoids = [int(m) for m in state.medoids]
        if self.epsilon == 0.0:
            objective = exact_sum(state.d)
        else:
            objective = kmedoids_objective(self.oracle, medoids)

        if not converged:
            self.logger.warning(f"trikmeds 达到最大迭代次数 {self.max_iters} 仍未收敛")
        result = KMedoidsResult(
            medoids=medoids,
            assignments=[int(x) for x in state.assignments_by_element()],
            objective=objective,
            iterations=iterations,
            distance_evals=distance_evals,
            algorithm="trikmeds",
            epsilon=self.epsilon,
            converged=converged,
            objective_history=history,
            empty_clusters=empty_clusters,
        )
        n = self.oracle.n
        self.logger.info(
            f"trikmeds 完成: K={len(medoids)}, epsilon={self.epsilon}, iterations={iterations}, "
            f"objective={objective:.6g}, distance_evals={distance_evals} ({distance_evals / (n * n):.4f}·N²)"
        )
        return result


def trikmeds(
    oracle: DistanceOracle,
    K: int,
    epsilon: float = 0.0,
    init: Optional[Sequence[int]] = None,
    seed: int = 0,
    max_iters: int = 10_000,
    checker: Optional[ClusterBoundChecker] = None,
) -> KMedoidsResult:
    """运行 trikmeds-ε 的便捷函数.

    Args:
        oracle: 对称距离预言机
        K: 簇数
        epsilon: 松弛因子
        init: 初始 medoid，缺省时按 seed 均匀抽取
        seed: 随机种子
        max_iters: 最大迭代次数
        checker: 可选的运行时边界检查器

    Returns:
        KMedoidsResult
    """
    if init is None:
        init = init_uniform(oracle.n, K, seed)
    elif len(init) != K:
        raise InvalidParameterError(f"初始 medoid 数量 {len(init)} 与 K={K} 不一致")
    return TrikmedsSolver(oracle, epsilon=epsilon, max_iters=max_iters, checker=checker).fit(init)
