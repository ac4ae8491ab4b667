"""trimed 运行时边界检查.

检查器持有在独立预言机上算出的精确能量，与算法维护的下界比较。
检查本身不在算法的预言机上产生任何距离计算。
"""

import numpy as np

from medoidkit.infrastructure.exceptions import BoundViolationError, InvalidParameterError
from medoidkit.infrastructure.utils.logger import LoggerMixin
from medoidkit.medoid.models.bounds import BoundState
from medoidkit.metric.services.energy import all_energies
from medoidkit.metric.services.oracle import DistanceOracle


class EnergyBoundChecker(LoggerMixin):
    """检查 l(i) ≤ E(i)，以及 E_cl 与 m_cl 的精确能量一致.

    Args:
        reference_energies: 每个元素的精确能量
        tolerance: 相对容差
    """

    def __init__(self, reference_energies: np.ndarray, tolerance: float = 1e-9) -> None:
        self.reference = np.asarray(reference_energies, dtype=np.float64)
        self.tolerance = tolerance
        self.n_checks = 0

    @classmethod
    def from_oracle(cls, reference_oracle: DistanceOracle, tolerance: float = 1e-9) -> "EnergyBoundChecker":
        """在给定（独立的）预言机上计算参考能量."""
        return cls(all_energies(reference_oracle), tolerance=tolerance)

    def check(self, state: BoundState) -> None:
        """检查当前状态.

        Raises:
            BoundViolationError: 存在超过精确能量的下界
        """
        if state.n != self.reference.shape[0]:
            raise InvalidParameterError(f"状态大小 {state.n} 与参考能量数量 {self.reference.shape[0]} 不一致")
        slack = self.tolerance * np.abs(self.reference)
        violated = np.flatnonzero(state.lower_bounds > self.reference + slack)
        if violated.size:
            j = int(violated[0])
            raise BoundViolationError("energy", j, float(state.lower_bounds[j]), float(self.reference[j]))

        if state.has_best:
            actual = float(self.reference[state.best_index])
            if abs(state.best_energy - actual) > self.tolerance * max(abs(actual), 1.0):
                raise BoundViolationError("best_energy", state.best_index, state.best_energy, actual)
        self.n_checks += 1
