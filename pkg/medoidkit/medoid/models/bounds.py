"""trimed 的边界状态与配置."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from medoidkit.infrastructure.exceptions import InvalidParameterError


@dataclass
class TrimedConfig:
    """trimed 配置.

    Attributes:
        seed: 遍历顺序的随机种子
        epsilon: 松弛因子，0 表示精确求解
    """

    seed: int = 0
    epsilon: float = 0.0

    def __post_init__(self) -> None:
        if not self.epsilon >= 0.0:
            raise InvalidParameterError(f"epsilon 必须非负: {self.epsilon}")


@dataclass
class BoundState:
    """trimed 运行状态.

    Attributes:
        lower_bounds: 每个元素的能量下界 l，始终满足 l(i) ≤ E(i)
        best_energy: 当前最优能量 E_cl，尚未计算任何元素时为 inf
        best_index: 当前最优元素 m_cl，尚未计算任何元素时为 -1
    """

    lower_bounds: np.ndarray
    best_energy: float = float("inf")
    best_index: int = -1

    @classmethod
    def initial(cls, n: int) -> "BoundState":
        """全零下界的初始状态."""
        return cls(lower_bounds=np.zeros(n, dtype=np.float64))

    @property
    def n(self) -> int:
        return int(self.lower_bounds.shape[0])

    @property
    def has_best(self) -> bool:
        return self.best_index >= 0

    def best(self) -> Optional[int]:
        """当前最优元素，未设置时返回 None."""
        return self.best_index if self.has_best else None
