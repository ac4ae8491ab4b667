"""Medoid 计算结果模型."""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class MedoidResult:
    """单次 medoid 计算的结果.

    Attributes:
        index: 返回的元素编号
        energy: 该元素的能量（到全部元素的平均距离）
        n_computed: 计算了完整距离行的元素个数
        distance_evals: 标量距离计算次数
        algorithm: 算法名称
        computed: 按计算顺序排列的被计算元素编号
    """

    index: int
    energy: float
    n_computed: int
    distance_evals: int
    algorithm: str = ""
    computed: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典.

        Returns:
            Dict[str, Any]: 结果字典表示
        """
        return {
            "index": self.index,
            "energy": self.energy,
            "n_computed": self.n_computed,
            "distance_evals": self.distance_evals,
            "algorithm": self.algorithm,
        }
