"""KMEDS：基于完整距离矩阵的 Voronoi 迭代."""

import logging
from typing import Optional, Sequence

import numpy as np

from medoidkit.clustering.models.state import KMedoidsResult
from medoidkit.clustering.services.initializers import init_uniform, validate_init
from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.metric.services.energy import exact_column_sums, exact_sum
from medoidkit.metric.services.oracle import DistanceOracle

logger = logging.getLogger(__name__)


def _assign(D: np.ndarray, medoids: np.ndarray) -> np.ndarray:
    """最近 medoid（平局取最小簇编号），medoid 固定在自己的簇中."""
    assignments = np.argmin(D[:, medoids], axis=1).astype(np.intp)
    assignments[medoids] = np.arange(medoids.size)
    return assignments


def _update(D: np.ndarray, medoids: np.ndarray, assignments: np.ndarray) -> np.ndarray:
    """每个簇取簇内距离和最小的元素，只有严格更优时才替换原 medoid，平局取最小编号."""
    updated = medoids.copy()
    for k in range(medoids.size):
        members = np.flatnonzero(assignments == k)
        if members.size == 0:
            logger.warning(f"簇 {k} 为空，保留 medoid {int(medoids[k])}")
            continue
        sums = exact_column_sums(D[np.ix_(members, members)])
        best = int(np.argmin(sums))
        incumbent = int(np.flatnonzero(members == medoids[k])[0])
        if sums[best] < sums[incumbent]:
            updated[k] = members[best]
    return updated


def kmeds(
    oracle: DistanceOracle,
    K: int,
    init: Optional[Sequence[int]] = None,
    max_iters: int = 10_000,
    seed: int = 0,
    matrix: Optional[np.ndarray] = None,
) -> KMedoidsResult:
    """KMEDS：先计算完整距离矩阵，再交替执行最近 medoid 分配与簇内精确 medoid 更新.

    Args:
        oracle: 距离预言机
        K: 簇数
        init: 初始 medoid，缺省时按 seed 均匀抽取
        max_iters: 最大迭代次数
        seed: 随机种子
        matrix: 已计算的完整距离矩阵（例如 Park 初始化时得到的），传入时不再计算

    Returns:
        KMedoidsResult: medoid 集合不再变化或达到 max_iters 时返回

    Raises:
        InvalidParameterError: K 超过元素个数或初始 medoid 非法
    """
    if max_iters < 1:
        raise InvalidParameterError(f"max_iters 必须至少为 1: {max_iters}")
    n = oracle.n
    if init is None:
        init = init_uniform(n, K, seed)
    medoids = validate_init(n, K, init)

    evals_before = oracle.eval_counter
    D = oracle.full_matrix() if matrix is None else np.asarray(matrix, dtype=np.float64)
    assignments = _assign(D, medoids)
    history = [exact_sum(D[np.arange(n), medoids[assignments]])]

    iterations = 0
    converged = False
    while iterations < max_iters:
        updated = _update(D, medoids, assignments)
        iterations += 1
        if np.array_equal(updated, medoids):
            converged = True
            break
        medoids = updated
        assignments = _assign(D, medoids)
        history.append(exact_sum(D[np.arange(n), medoids[assignments]]))
        logger.debug(f"KMEDS 第 {iterations} 轮: objective={history[-1]:.6g}")

    distance_evals = oracle.eval_counter - evals_before
    if not converged:
        logger.warning(f"KMEDS 达到最大迭代次数 {max_iters} 仍未收敛")
    result = KMedoidsResult(
        medoids=[int(m) for m in medoids],
        assignments=[int(a) for a in assignments],
        objective=history[-1],
        iterations=iterations,
        distance_evals=distance_evals,
        algorithm="kmeds",
        epsilon=0.0,
        converged=converged,
        objective_history=history,
    )
    logger.info(
        f"KMEDS 完成: K={K}, iterations={iterations}, objective={result.objective:.6g}, "
        f"distance_evals={distance_evals}"
    )
    return result
