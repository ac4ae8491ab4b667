"""K-medoids 初始化方法."""

import logging
from typing import List, Optional, Sequence

import numpy as np

from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.metric.services.oracle import DistanceOracle

logger = logging.getLogger(__name__)


def _check_k(n: int, K: int) -> None:
    if K < 1:
        raise InvalidParameterError(f"K 必须至少为 1: {K}")
    if K > n:
        raise InvalidParameterError(f"K={K} 超过元素个数 {n}")


def init_uniform(n: int, K: int, seed: int = 0) -> List[int]:
    """无放回均匀抽取 K 个元素.

    Args:
        n: 元素个数
        K: 簇数
        seed: 随机种子

    Returns:
        List[int]: K 个互不相同的元素编号
    """
    _check_k(n, K)
    rng = np.random.default_rng(seed)
    return [int(i) for i in rng.choice(n, size=K, replace=False)]


def init_park(oracle: DistanceOracle, K: int, matrix: Optional[np.ndarray] = None) -> List[int]:
    """Park 初始化：取 f(i) = Σ_j D(i, j) / S(j) 最小的 K 个元素，S(j) 为第 j 列之和.

    需要完整距离矩阵，代价为平方级。S(j) = 0 的项按 0 处理并给出警告。

    Args:
        oracle: 距离预言机
        K: 簇数
        matrix: 已计算的完整距离矩阵（缺省时由预言机计算）

    Returns:
        List[int]: f 最小的 K 个元素，平局取最小编号

    Examples:
        >>> oracle = make_oracle(VectorDataset.from_rows([[0], [1], [10]]))
        >>> init_park(oracle, 1)
        [1]
    """
    n = oracle.n
    _check_k(n, K)
    D = oracle.full_matrix() if matrix is None else np.asarray(matrix, dtype=np.float64)
    column_sums = D.sum(axis=0)
    zero_columns = column_sums == 0
    if n > 1 and zero_columns.any():
        logger.warning(f"Park 初始化: {int(zero_columns.sum())} 列的距离和为 0，相应项按 0 处理")

    ratios = np.divide(D, column_sums[None, :], out=np.zeros_like(D), where=~zero_columns[None, :])
    scores = ratios.sum(axis=1)
    chosen = [int(i) for i in np.argsort(scores, kind="stable")[:K]]
    logger.debug(f"Park 初始化完成: K={K}, medoids={chosen}")
    return chosen


def validate_init(n: int, K: int, init: Sequence[int]) -> np.ndarray:
    """检查初始 medoid：数量为 K、互不相同且在 [0, n) 内."""
    _check_k(n, K)
    medoids = np.asarray([int(i) for i in init], dtype=np.intp)
    if medoids.shape != (K,):
        raise InvalidParameterError(f"初始 medoid 数量 {medoids.size} 与 K={K} 不一致")
    if np.unique(medoids).size != K:
        raise InvalidParameterError("初始 medoid 必须互不相同")
    if medoids.min() < 0 or medoids.max() >= n:
        raise InvalidParameterError(f"初始 medoid 编号超出范围 [0, {n})")
    return medoids
