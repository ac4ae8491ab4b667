"""能量与暴力 medoid."""

import logging
import math
from typing import Iterable, Union

import numpy as np

from medoidkit.infrastructure.exceptions import EmptyDatasetError
from medoidkit.metric.models.result import MedoidResult
from medoidkit.metric.services.oracle import DistanceOracle

logger = logging.getLogger(__name__)


def exact_sum(values: Union[np.ndarray, Iterable[float]]) -> float:
    """正确舍入的距离和，与求和顺序无关.

    能量、簇内和与目标值都用它求和：同一组距离无论以什么顺序给出，结果逐位相同。
    """
    return math.fsum(np.asarray(values, dtype=np.float64).ravel().tolist())


def exact_column_sums(matrix: np.ndarray) -> np.ndarray:
    """逐列的 ``exact_sum``."""
    matrix = np.asarray(matrix, dtype=np.float64)
    return np.array([math.fsum(column) for column in matrix.T.tolist()], dtype=np.float64)


def row_energy(row: np.ndarray) -> float:
    """由距离行计算能量：精确求和后除以 n（包含自身的 0 项）."""
    return exact_sum(row) / len(row)


def energy(oracle: DistanceOracle, i: int) -> float:
    """计算元素 i 的能量 E(i) = (1/N)·Σⱼ dist(i, j).

    Args:
        oracle: 距离预言机
        i: 元素编号

    Returns:
        float: 能量，计一个距离行

    Examples:
        >>> oracle = make_oracle(VectorDataset.from_rows([[0], [1], [5]]))
        >>> energy(oracle, 1)
        1.6666666666666667
    """
    return row_energy(oracle.row(i))


def brute_force_medoid(oracle: DistanceOracle) -> MedoidResult:
    """计算全部元素的能量并返回最小者，平局取最小编号.

    Args:
        oracle: 距离预言机

    Returns:
        MedoidResult: n_computed = n

    Raises:
        EmptyDatasetError: 元素集合为空
    """
    n = oracle.n
    if n == 0:
        raise EmptyDatasetError("元素集合为空")

    evals_before = oracle.eval_counter
    energies = np.empty(n, dtype=np.float64)
    for i in range(n):
        energies[i] = energy(oracle, i)

    best = int(np.argmin(energies))
    result = MedoidResult(
        index=best,
        energy=float(energies[best]),
        n_computed=n,
        distance_evals=oracle.eval_counter - evals_before,
        algorithm="brute",
        computed=list(range(n)),
    )
    logger.info(f"暴力求解完成: index={best}, energy={result.energy:.6g}, n_computed={n}")
    return result


def all_energies(oracle: DistanceOracle) -> np.ndarray:
    """计算全部元素的能量（每个元素一个距离行），供检查与 top-k 基准使用."""
    return np.array([energy(oracle, i) for i in range(oracle.n)], dtype=np.float64)
