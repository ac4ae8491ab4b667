"""数据生成参数."""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Literal, Optional

from medoidkit.infrastructure.exceptions import InvalidParameterError

GeneratorKind = Literal["uniform_cube", "ball_uniform", "ball_skewed", "sensor_graph"]
GENERATOR_KINDS = ("uniform_cube", "ball_uniform", "ball_skewed", "sensor_graph")

# 偏斜球预设：内层保留概率
SKEWED_PRESETS: Dict[str, float] = {
    "skewed-19x": 0.1,
    "inner-1-200": 0.01,
}


@dataclass
class GenSpec:
    """生成器规格.

    Attributes:
        kind: 生成器类型
        n: 元素个数
        dim: 向量维数（传感器图固定为平面）
        p_keep: 偏斜球内层点的保留概率
        radius_const: 传感器图连接半径常数 c，半径为 c/√n；缺省按有向/无向取配置值
        directed: 传感器图是否有向
        seed: 随机种子
        max_retries: 传感器图连通性重试次数上限
        keep_largest: 传感器图不要求整体连通，保留最大（强）连通分量
    """

    kind: GeneratorKind
    n: int
    dim: int = 2
    p_keep: float = 0.1
    radius_const: Optional[float] = None
    directed: bool = False
    seed: int = 0
    max_retries: int = 20
    keep_largest: bool = False

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise InvalidParameterError(f"未知的生成器类型: {self.kind}")
        if self.n < 1:
            raise InvalidParameterError(f"n 必须至少为 1: {self.n}")
        if self.dim < 1:
            raise InvalidParameterError(f"dim 必须至少为 1: {self.dim}")
        if not 0.0 < self.p_keep <= 1.0:
            raise InvalidParameterError(f"p_keep 必须在 (0, 1] 内: {self.p_keep}")
        if self.radius_const is not None and not self.radius_const > 0:
            raise InvalidParameterError(f"radius_const 必须为正: {self.radius_const}")
        if self.max_retries < 0:
            raise InvalidParameterError(f"max_retries 不能为负: {self.max_retries}")

    @property
    def is_graph(self) -> bool:
        return self.kind == "sensor_graph"

    def resolved_radius_const(self, undirected_default: float = 1.25, directed_default: float = 1.45) -> float:
        """未指定时按有向/无向返回缺省半径常数."""
        if self.radius_const is not None:
            return self.radius_const
        return directed_default if self.directed else undirected_default

    def label(self) -> str:
        """用于记录与文件名的简短标识."""
        if self.kind == "sensor_graph":
            largest = "-lcc" if self.keep_largest else ""
            return f"sensor_graph-{'d' if self.directed else 'u'}{largest}-n{self.n}-s{self.seed}"
        if self.kind == "ball_skewed":
            return f"ball_skewed-p{self.p_keep:g}-n{self.n}-d{self.dim}-s{self.seed}"
        return f"{self.kind}-n{self.n}-d{self.dim}-s{self.seed}"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GenSpec":
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)
