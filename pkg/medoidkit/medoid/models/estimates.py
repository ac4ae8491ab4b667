"""RAND 估计与 TOPRANK 系列的参数、结果模型."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.metric.models.result import MedoidResult


@dataclass
class EnergyEstimates:
    """RAND 能量估计.

    Attributes:
        anchors: 锚点集合 I（按抽取顺序）
        estimates: 每个元素的估计能量 Ê(j) = 锚点到 j 的平均距离
        delta_hat: 直径上界 Δ̂ = 2·min_{i∈I} max_j dist(i, j)
        anchor_energies: 锚点的精确能量（由锚点距离行直接得到，二次计算时复用）
        anchor_rows: 保留的锚点距离行，仅在 ``keep_rows=True`` 时填充
    """

    anchors: List[int]
    estimates: np.ndarray
    delta_hat: float
    anchor_energies: Dict[int, float] = field(default_factory=dict)
    anchor_rows: Optional[np.ndarray] = None

    @property
    def n_anchors(self) -> int:
        return len(self.anchors)


@dataclass
class TopRankParams:
    """TOPRANK / TOPRANK2 参数.

    Attributes:
        k: 需要的前 k 个元素
        alpha_prime: 阈值参数 α′
        anchor_constant: TOPRANK 锚点数常数 q，锚点数为 q·N^{2/3}·(log N)^{1/3}
        n_anchors: 直接指定 TOPRANK 锚点数（覆盖 anchor_constant）
        l0: TOPRANK2 初始锚点数，缺省为 ceil(√N)
        q_incr: TOPRANK2 每轮新增锚点数，缺省为 ceil(log N)
    """

    k: int = 1
    alpha_prime: float = 1.0
    anchor_constant: float = 1.0
    n_anchors: Optional[int] = None
    l0: Optional[int] = None
    q_incr: Optional[int] = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidParameterError(f"k 必须至少为 1: {self.k}")
        if not self.alpha_prime > 0:
            raise InvalidParameterError(f"alpha_prime 必须为正: {self.alpha_prime}")
        if not self.anchor_constant > 0:
            raise InvalidParameterError(f"anchor_constant 必须为正: {self.anchor_constant}")
        if self.n_anchors is not None and self.n_anchors < 1:
            raise InvalidParameterError(f"n_anchors 必须至少为 1: {self.n_anchors}")
        if self.l0 is not None and self.l0 < 1:
            raise InvalidParameterError(f"l0 必须至少为 1: {self.l0}")
        if self.q_incr is not None and self.q_incr < 1:
            raise InvalidParameterError(f"q_incr 必须至少为 1: {self.q_incr}")


@dataclass
class RankingResult:
    """TOPRANK 系列的结果.

    Attributes:
        indices: 能量最低的 k 个元素，按 (能量, 编号) 升序
        energies: 对应的精确能量
        n_computed: 计算了距离行的元素数 = 锚点数 + |Q \\ I|
        distance_evals: 标量距离计算次数
        n_anchors: 最终锚点数 l
        n_candidates: 候选集合 Q 的大小
        rounds: 估计轮数（TOPRANK 为 1）
        algorithm: 算法名称
    """

    indices: List[int]
    energies: List[float]
    n_computed: int
    distance_evals: int
    n_anchors: int
    n_candidates: int
    rounds: int = 1
    algorithm: str = "toprank"
    candidates: List[int] = field(default_factory=list)

    def to_medoid_result(self) -> MedoidResult:
        """取排名第一的元素，转换为 MedoidResult."""
        return MedoidResult(
            index=self.indices[0],
            energy=self.energies[0],
            n_computed=self.n_computed,
            distance_evals=self.distance_evals,
            algorithm=self.algorithm,
        )

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典."""
        return {
            "indices": list(self.indices),
            "energies": list(self.energies),
            "n_computed": self.n_computed,
            "distance_evals": self.distance_evals,
            "n_anchors": self.n_anchors,
            "n_candidates": self.n_candidates,
            "rounds": self.rounds,
            "algorithm": self.algorithm,
        }
