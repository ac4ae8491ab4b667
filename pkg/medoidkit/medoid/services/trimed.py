"""trimed：基于三角不等式剪枝的精确 medoid 算法.

按随机顺序遍历元素，维护每个元素能量的下界 l。对于已计算的元素 i，
三角不等式给出 |E(i) - dist(i, j)| ≤ E(j)，因此只有下界不足以排除的元素
才需要计算完整距离行。ε > 0 时放宽排除条件，返回能量不超过 (1+ε)·E*。
"""

from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from medoidkit.infrastructure.exceptions import EmptyDatasetError, InvalidParameterError
from medoidkit.infrastructure.utils.logger import LoggerMixin
from medoidkit.medoid.models.bounds import BoundState, TrimedConfig
from medoidkit.medoid.services.checks import EnergyBoundChecker
from medoidkit.metric.models.result import MedoidResult
from medoidkit.metric.services.energy import row_energy
from medoidkit.metric.services.oracle import DistanceOracle


def update_bounds(state: BoundState, i: int, energy_i: float, row: np.ndarray) -> BoundState:
    """用元素 i 的距离行收紧全部下界.

    l(i) 先设为 E_i，然后对每个 j 执行 l(j) ← max(l(j), |E_i - row(j)|)，
    j = i 时该项正好是 E_i。原地更新并返回同一个状态对象。

    Args:
        state: 边界状态
        i: 刚计算的元素
        energy_i: 元素 i 的能量
        row: 元素 i 的完整距离行

    Returns:
        BoundState: 更新后的状态
    """
    lower = state.lower_bounds
    lower[i] = energy_i
    np.maximum(lower, np.abs(energy_i - np.asarray(row, dtype=np.float64)), out=lower)
    return state


class TrimedSolver(LoggerMixin):
    """trimed 求解器.

    Attributes:
        state: 最近一次 ``solve`` 结束时的边界状态
    """

    def __init__(
        self,
        oracle: DistanceOracle,
        config: Optional[TrimedConfig] = None,
        checker: Optional[EnergyBoundChecker] = None,
    ) -> None:
        """初始化求解器.

        Args:
            oracle: 距离预言机，必须对称（有向图使用对称化视图）
            config: 种子与松弛因子
            checker: 可选的运行时边界检查器
        """
        self.oracle = oracle
        self.config = config or TrimedConfig()
        self.checker = checker
        self.state: Optional[BoundState] = None

    def visit_order(self) -> np.ndarray:
        """由种子确定的均匀随机遍历顺序."""
        rng = np.random.default_rng(self.config.seed)
        return rng.permutation(self.oracle.n)

    def _validate_order(self, order: Sequence[int]) -> np.ndarray:
        order = np.asarray(order, dtype=np.intp)
        n = self.oracle.n
        if order.shape != (n,) or not np.array_equal(np.sort(order), np.arange(n)):
            raise InvalidParameterError(f"遍历顺序必须是 0..{n - 1} 的一个排列")
        return order

    def solve(self, order: Optional[Sequence[int]] = None) -> MedoidResult:
        """运行 trimed.

        Args:
            order: 指定遍历顺序（缺省为按种子随机打乱）

        Returns:
            MedoidResult: ε = 0 时为真实 medoid

        Raises:
            EmptyDatasetError: 元素集合为空
            InvalidParameterError: 预言机不对称或顺序不是排列
        """
        n = self.oracle.n
        if n == 0:
            raise EmptyDatasetError("元素集合为空")
        if not self.oracle.symmetric:
            raise InvalidParameterError("trimed 需要对称距离，有向图请使用对称化视图")

        visit = self.visit_order() if order is None else self._validate_order(order)
        factor = 1.0 + self.config.epsilon
        state = BoundState.initial(n)
        self.state = state
        lower = state.lower_bounds
        computed: List[int] = []
        evals_before = self.oracle.eval_counter

        for i in visit:
            i = int(i)
            if not lower[i] * factor < state.best_energy:
                continue
            row = self.oracle.row(i)
            energy_i = row_energy(row)
            computed.append(i)
            if energy_i < state.best_energy:
                state.best_energy = energy_i
                state.best_index = i
            update_bounds(state, i, energy_i, row)
            if self.checker is not None:
                self.checker.check(state)

        result = MedoidResult(
            index=state.best_index,
            energy=state.best_energy,
            n_computed=len(computed),
            distance_evals=self.oracle.eval_counter - evals_before,
            algorithm="trimed",
            computed=computed,
        )
        self.logger.info(
            f"trimed 完成: index={result.index}, energy={result.energy:.6g}, "
            f"n_computed={result.n_computed}/{n}, epsilon={self.config.epsilon}"
        )
        return result


def trimed(
    oracle: DistanceOracle,
    config: Optional[TrimedConfig] = None,
    order: Optional[Sequence[int]] = None,
    checker: Optional[EnergyBoundChecker] = None,
    keep_state: bool = False,
) -> Union[MedoidResult, Tuple[MedoidResult, BoundState]]:
    """运行 trimed 的便捷函数.

    Args:
        oracle: 距离预言机
        config: 种子与松弛因子
        order: 指定遍历顺序
        checker: 可选的运行时边界检查器
        keep_state: 是否同时返回最终边界状态

    Returns:
        MedoidResult，或 keep_state=True 时的 (MedoidResult, BoundState)

    Examples:
        >>> oracle = make_oracle(VectorDataset.from_rows([[0], [1], [5]]))
        >>> trimed(oracle, order=[0, 1, 2]).n_computed
        2
    """
    solver = TrimedSolver(oracle, config=config, checker=checker)
    result = solver.solve(order=order)
    if keep_state:
        return result, solver.state
    return result
