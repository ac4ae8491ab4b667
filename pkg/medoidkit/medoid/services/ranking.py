"""基于锚点采样的能量估计与 top-k 排名.

    - RAND: 用 l 个随机锚点的距离行估计全部元素的能量
    - TOPRANK: 一次估计后筛选候选集合 Q，再精确计算 Q 中元素的能量
    - TOPRANK2: 逐步增加锚点，直到候选集合的缩小幅度低于 log(n)

锚点的精确能量在估计阶段顺带得到，第二阶段不会重复计算锚点的距离行。
"""

import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from medoidkit.infrastructure.exceptions import EmptyDatasetError, InvalidParameterError
from medoidkit.medoid.models.estimates import EnergyEstimates, RankingResult, TopRankParams
from medoidkit.metric.models.result import MedoidResult
from medoidkit.metric.services.energy import energy, row_energy
from medoidkit.metric.services.oracle import DistanceOracle

logger = logging.getLogger(__name__)


class _AnchorAccumulator:
    """逐个累加锚点距离行，随时给出估计值."""

    def __init__(self, oracle: DistanceOracle, keep_rows: bool = False) -> None:
        self.oracle = oracle
        self.keep_rows = keep_rows
        self.anchors: List[int] = []
        self.row_sums = np.zeros(oracle.n, dtype=np.float64)
        self.eccentricities: List[float] = []
        self.anchor_energies: Dict[int, float] = {}
        self.rows: List[np.ndarray] = []

    def add(self, anchors: Sequence[int]) -> None:
        for i in anchors:
            i = int(i)
            row = self.oracle.row(i)
            self.anchors.append(i)
            self.row_sums += row
            self.eccentricities.append(float(row.max()))
            self.anchor_energies[i] = row_energy(row)
            if self.keep_rows:
                self.rows.append(row)

    def snapshot(self) -> EnergyEstimates:
        return EnergyEstimates(
            anchors=list(self.anchors),
            estimates=self.row_sums / len(self.anchors),
            delta_hat=2.0 * min(self.eccentricities),
            anchor_energies=dict(self.anchor_energies),
            anchor_rows=np.vstack(self.rows) if self.keep_rows else None,
        )


def _clamp(value: int, n: int) -> int:
    return max(1, min(n, int(value)))


def toprank_anchor_count(n: int, anchor_constant: float = 1.0) -> int:
    """TOPRANK 锚点数 ceil(q·N^{2/3}·(log N)^{1/3})，截断到 [1, n]."""
    if n <= 1:
        return 1
    return _clamp(math.ceil(anchor_constant * n ** (2.0 / 3.0) * math.log(n) ** (1.0 / 3.0)), n)


def rand_anchor_count(n: int, epsilon: float = 0.05) -> int:
    """RAND 求 medoid 的锚点数 ceil(log N / ε²)，截断到 [1, n]."""
    if not epsilon > 0:
        raise InvalidParameterError(f"epsilon 必须为正: {epsilon}")
    if n <= 1:
        return 1
    return _clamp(math.ceil(math.log(n) / epsilon**2), n)


def rand_estimate(
    oracle: DistanceOracle,
    l: int,
    seed: int = 0,
    anchors: Optional[Sequence[int]] = None,
    keep_rows: bool = False,
) -> EnergyEstimates:
    """RAND 能量估计.

    Args:
        oracle: 距离预言机
        l: 锚点数
        seed: 随机种子
        anchors: 直接指定锚点（此时忽略 seed，l 必须等于其长度）
        keep_rows: 是否保留锚点距离行（内存 l×n）

    Returns:
        EnergyEstimates: 代价为 l 个距离行

    Raises:
        InvalidParameterError: l 不在 [1, n] 内或锚点非法

    Examples:
        >>> oracle = make_oracle(VectorDataset.from_rows([[0], [1], [5]]))
        >>> rand_estimate(oracle, 2, anchors=[0, 2]).estimates
        array([2.5, 2.5, 2.5])
    """
    n = oracle.n
    if not 1 <= l <= n:
        raise InvalidParameterError(f"锚点数 l={l} 必须在 [1, {n}] 内")
    if anchors is None:
        anchors = np.random.default_rng(seed).permutation(n)[:l]
    else:
        anchors = [int(a) for a in anchors]
        if len(anchors) != l or len(set(anchors)) != l:
            raise InvalidParameterError("指定的锚点必须互不相同且数量等于 l")

    accumulator = _AnchorAccumulator(oracle, keep_rows=keep_rows)
    accumulator.add(anchors)
    estimates = accumulator.snapshot()
    logger.debug(f"RAND 估计完成: l={l}, delta_hat={estimates.delta_hat:.6g}")
    return estimates


def _candidates(estimates: EnergyEstimates, k: int, alpha_prime: float, n: int) -> Tuple[np.ndarray, float]:
    """候选集合 Q = {i : Ê(i) ≤ Ê[k] + 2·α′·Δ̂·sqrt(log n / l)}."""
    values = estimates.estimates
    kth = float(np.partition(values, k - 1)[k - 1])
    threshold = kth + 2.0 * alpha_prime * estimates.delta_hat * math.sqrt(math.log(n) / estimates.n_anchors)
    return np.flatnonzero(values <= threshold), threshold


def _rank_candidates(
    oracle: DistanceOracle, candidates: np.ndarray, estimates: EnergyEstimates, k: int
) -> Tuple[List[int], List[float], int]:
    """精确计算候选元素的能量（锚点复用已有能量），返回前 k 个及新计算的行数."""
    exact: List[Tuple[float, int]] = []
    extra_rows = 0
    for j in candidates:
        j = int(j)
        if j in estimates.anchor_energies:
            exact.append((estimates.anchor_energies[j], j))
        else:
            exact.append((energy(oracle, j), j))
            extra_rows += 1
    exact.sort()
    top = exact[:k]
    return [j for _, j in top], [e for e, _ in top], extra_rows


def _check_k(oracle: DistanceOracle, k: int) -> None:
    if oracle.n == 0:
        raise EmptyDatasetError("元素集合为空")
    if k > oracle.n:
        raise InvalidParameterError(f"k={k} 超过元素个数 {oracle.n}")


def toprank(oracle: DistanceOracle, params: Optional[TopRankParams] = None, seed: int = 0) -> RankingResult:
    """TOPRANK：一次 RAND 估计，筛选候选集合后精确排名.

    Args:
        oracle: 距离预言机
        params: 参数（k、α′、锚点常数）
        seed: 随机种子

    Returns:
        RankingResult: n_computed = l + |Q \\ I|
    """
    params = params or TopRankParams()
    _check_k(oracle, params.k)
    n = oracle.n
    l = _clamp(params.n_anchors, n) if params.n_anchors is not None else toprank_anchor_count(n, params.anchor_constant)

    evals_before = oracle.eval_counter
    estimates = rand_estimate(oracle, l, seed=seed)
    candidates, threshold = _candidates(estimates, params.k, params.alpha_prime, n)
    indices, energies, extra_rows = _rank_candidates(oracle, candidates, estimates, params.k)

    result = RankingResult(
        indices=indices,
        energies=energies,
        n_computed=l + extra_rows,
        distance_evals=oracle.eval_counter - evals_before,
        n_anchors=l,
        n_candidates=int(candidates.size),
        rounds=1,
        algorithm="toprank",
        candidates=[int(c) for c in candidates],
    )
    logger.info(
        f"TOPRANK 完成: top={indices}, l={l}, |Q|={result.n_candidates}, "
        f"threshold={threshold:.6g}, n_computed={result.n_computed}/{n}"
    )
    return result


def toprank2(oracle: DistanceOracle, params: Optional[TopRankParams] = None, seed: int = 0) -> RankingResult:
    """TOPRANK2：逐步增加锚点直到候选集合趋于稳定，再精确排名.

    从 l0 个锚点开始（缺省 ceil(√N)），每轮增加 q_incr 个（缺省 ceil(log N)），
    重新计算 Ê、Δ̂ 和 Q；当 |Q| 的减少量小于 log(n) 或锚点用尽时停止。

    Args:
        oracle: 距离预言机
        params: 参数（k、α′、l0、q_incr）
        seed: 随机种子

    Returns:
        RankingResult: 返回元素是最终 Q 中精确能量最低的 k 个
    """
    params = params or TopRankParams()
    _check_k(oracle, params.k)
    n = oracle.n
    log_n = math.log(n)
    l0 = _clamp(params.l0 if params.l0 is not None else math.ceil(math.sqrt(n)), n)
    q_incr = params.q_incr if params.q_incr is not None else max(1, math.ceil(log_n))

    evals_before = oracle.eval_counter
    permutation = np.random.default_rng(seed).permutation(n)
    accumulator = _AnchorAccumulator(oracle)
    accumulator.add(permutation[:l0])
    estimates = accumulator.snapshot()
    candidates, _ = _candidates(estimates, params.k, params.alpha_prime, n)
    rounds = 1

    while len(accumulator.anchors) < n:
        p = candidates.size
        start = len(accumulator.anchors)
        accumulator.add(permutation[start : start + q_incr])
        estimates = accumulator.snapshot()
        candidates, _ = _candidates(estimates, params.k, params.alpha_prime, n)
        rounds += 1
        logger.debug(f"TOPRANK2 第 {rounds} 轮: l={estimates.n_anchors}, |Q|={candidates.size}")
        if p - candidates.size < log_n:
            break

    indices, energies, extra_rows = _rank_candidates(oracle, candidates, estimates, params.k)
    l = estimates.n_anchors
    result = RankingResult(
        indices=indices,
        energies=energies,
        n_computed=l + extra_rows,
        distance_evals=oracle.eval_counter - evals_before,
        n_anchors=l,
        n_candidates=int(candidates.size),
        rounds=rounds,
        algorithm="toprank2",
        candidates=[int(c) for c in candidates],
    )
    logger.info(
        f"TOPRANK2 完成: top={indices}, l={l}, rounds={rounds}, |Q|={result.n_candidates}, "
        f"n_computed={result.n_computed}/{n}"
    )
    return result


def rand_medoid(
    oracle: DistanceOracle, l: Optional[int] = None, seed: int = 0, epsilon: float = 0.05
) -> MedoidResult:
    """用 RAND 估计近似求 medoid.

    返回估计能量最小的元素（平局取最小编号）及其精确能量；该元素不是锚点时
    额外计算一个距离行。

    Args:
        oracle: 距离预言机
        l: 锚点数，缺省为 ceil(log N / ε²)
        seed: 随机种子
        epsilon: 目标相对误差，仅在 l 缺省时使用

    Returns:
        MedoidResult
    """
    n = oracle.n
    if n == 0:
        raise EmptyDatasetError("元素集合为空")
    l = _clamp(l, n) if l is not None else rand_anchor_count(n, epsilon)

    evals_before = oracle.eval_counter
    estimates = rand_estimate(oracle, l, seed=seed)
    best = int(np.argmin(estimates.estimates))
    n_computed = l
    if best in estimates.anchor_energies:
        best_energy = estimates.anchor_energies[best]
    else:
        best_energy = energy(oracle, best)
        n_computed += 1

    result = MedoidResult(
        index=best,
        energy=best_energy,
        n_computed=n_computed,
        distance_evals=oracle.eval_counter - evals_before,
        algorithm="rand",
        computed=list(estimates.anchors) + ([] if n_computed == l else [best]),
    )
    logger.info(f"RAND 完成: index={best}, energy={best_energy:.6g}, l={l}, n_computed={n_computed}/{n}")
    return result
