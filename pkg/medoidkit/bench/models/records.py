"""基准测试记录与实验配置模型."""

from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional, Tuple

from medoidkit.datagen.models.spec import GENERATOR_KINDS
from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.metric.services.loader import DELIMITERS

MEDOID_ALGORITHMS = ("trimed", "brute", "rand", "toprank", "toprank2")
KMEDOIDS_ALGORITHMS = ("kmeds", "trikmeds")
INIT_METHODS = ("uniform", "park")

CSV_SCHEMA_VERSION = 1


@dataclass
class RunRecord:
    """一次运行的结果记录，字段顺序即 CSV 列顺序.

    Attributes:
        algorithm: 算法名称
        dataset: 数据集标识（生成器规格标识或文件路径）
        n: 元素个数（图为节点数）
        d: 维数（图为 0）
        seed: 随机种子
        k: medoid 任务的 top-k，或聚类的簇数 K
        epsilon: 松弛因子
        alpha_prime: TOPRANK 阈值参数 α′
        n_computed: 计算了完整距离行的元素个数
        distance_evals: 标量距离计算次数
        result: 返回的元素编号，多个时以 ``;`` 连接
        objective: medoid 任务为能量，聚类为 L(M)
        wall_time: 墙钟时间（秒），不参与任何判定
        iterations: 迭代轮数
        n_edges: 图的边数（向量为 0）
        evals_ratio: distance_evals / n²
        phi_c: 相对 ε = 0 基线的距离计算次数之比，无基线时为空
        phi_E: 相对 ε = 0 基线的目标值之比，无基线时为空
        status: ``ok`` 或 ``error``
        error: 失败时的错误信息
        schema_version: CSV 版本号
    """

    algorithm: str
    dataset: str
    n: int
    d: int
    seed: int
    k: int = 1
    epsilon: float = 0.0
    alpha_prime: float = 0.0
    n_computed: int = 0
    distance_evals: int = 0
    result: str = ""
    objective: float = 0.0
    wall_time: float = 0.0
    iterations: int = 0
    n_edges: int = 0
    evals_ratio: float = 0.0
    phi_c: Optional[float] = None
    phi_E: Optional[float] = None
    status: str = "ok"
    error: str = ""
    schema_version: int = CSV_SCHEMA_VERSION

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def result_indices(self) -> List[int]:
        """解析 result 字段."""
        return [int(x) for x in self.result.split(";") if x != ""]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]


def _validate_tolerance(tolerance: Optional[float]) -> None:
    if tolerance is not None and not tolerance >= 0.0:
        raise InvalidParameterError(f"检查容差必须非负: {tolerance}")


@dataclass
class MedoidRunConfig:
    """单次 medoid 运行参数.

    Attributes:
        algorithm: trimed、brute、rand、toprank 或 toprank2
        seed: 随机种子
        epsilon: trimed 松弛因子
        k: TOPRANK 系列的 top-k
        alpha_prime: TOPRANK 阈值参数
        anchor_constant: TOPRANK 锚点数常数
        n_anchors: 直接指定 TOPRANK / RAND 的锚点数
        l0: TOPRANK2 初始锚点数
        q_incr: TOPRANK2 每轮新增锚点数
        rand_epsilon: RAND 缺省锚点数对应的相对误差
        symmetrize: 有向图是否使用对称化视图
        check_tolerance: 给定时为 trimed 挂接运行时边界检查器，取值为其相对容差
    """

    algorithm: str
    seed: int = 0
    epsilon: float = 0.0
    k: int = 1
    alpha_prime: float = 1.0
    anchor_constant: float = 1.0
    n_anchors: Optional[int] = None
    l0: Optional[int] = None
    q_incr: Optional[int] = None
    rand_epsilon: float = 0.05
    symmetrize: bool = True
    check_tolerance: Optional[float] = None

    def __post_init__(self) -> None:
        if self.algorithm not in MEDOID_ALGORITHMS:
            raise InvalidParameterError(f"未知的 medoid 算法: {self.algorithm}，可选 {', '.join(MEDOID_ALGORITHMS)}")
        _validate_tolerance(self.check_tolerance)


@dataclass
class KMedoidsRunConfig:
    """单次 K-medoids 运行参数.

    Attributes:
        algorithm: kmeds 或 trikmeds
        K: 簇数
        seed: 随机种子
        epsilon: trikmeds 松弛因子
        init: uniform 或 park
        max_iters: 最大迭代次数
        check_tolerance: 给定时为 trikmeds 挂接运行时边界检查器，取值为其相对容差
    """

    algorithm: str
    K: int
    seed: int = 0
    epsilon: float = 0.0
    init: str = "uniform"
    max_iters: int = 10_000
    check_tolerance: Optional[float] = None

    def __post_init__(self) -> None:
        if self.algorithm not in KMEDOIDS_ALGORITHMS:
            raise InvalidParameterError(
                f"未知的 K-medoids 算法: {self.algorithm}，可选 {', '.join(KMEDOIDS_ALGORITHMS)}"
            )
        if self.init not in INIT_METHODS:
            raise InvalidParameterError(f"未知的初始化方法: {self.init}，可选 {', '.join(INIT_METHODS)}")
        if self.K < 1:
            raise InvalidParameterError(f"K 必须至少为 1: {self.K}")
        _validate_tolerance(self.check_tolerance)


@dataclass
class SweepSpec:
    """扫描实验规格.

    Attributes:
        algorithms: 算法列表（medoid 与 K-medoids 算法可以混合）
        n_grid: 严格递增的规模序列
        seeds: 每个规模的种子数，种子为 base_seed, base_seed+1, ...
        generator: 生成器类型（未给出 input_path 时使用）
        dim: 向量维数
        p_keep: 偏斜球保留概率
        radius_const: 传感器图半径常数
        directed: 传感器图是否有向
        keep_largest: 传感器图保留最大（强）连通分量
        input_path: 输入文件；向量文件按种子无放回抽取 N 个点，图文件只能以其节点数运行
        input_kind: ``vectors`` 或 ``graph``
        delimiter: 向量输入文件的分隔符，``comma`` 或 ``whitespace``
        base_seed: 起始种子
        params: 算法参数（trimed_epsilon、trikmeds_epsilon、alpha_prime、anchor_constant、k、K、init、max_iters）
        workers: 并行线程数
    """

    algorithms: List[str]
    n_grid: List[int]
    seeds: int = 5
    generator: str = "uniform_cube"
    dim: int = 2
    p_keep: float = 0.1
    radius_const: Optional[float] = None
    directed: bool = False
    keep_largest: bool = False
    input_path: Optional[str] = None
    input_kind: str = "vectors"
    delimiter: str = "whitespace"
    base_seed: int = 0
    params: Dict[str, Any] = field(default_factory=dict)
    workers: int = 1

    def __post_init__(self) -> None:
        if not self.algorithms:
            raise InvalidParameterError("算法列表不能为空")
        unknown = [a for a in self.algorithms if a not in MEDOID_ALGORITHMS + KMEDOIDS_ALGORITHMS]
        if unknown:
            raise InvalidParameterError(f"未知的算法: {', '.join(unknown)}")
        if not self.n_grid:
            raise InvalidParameterError("N 网格不能为空")
        if any(n < 1 for n in self.n_grid):
            raise InvalidParameterError(f"N 网格中的值必须至少为 1: {self.n_grid}")
        if any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:])):
            raise InvalidParameterError(f"N 网格必须严格递增: {self.n_grid}")
        if self.seeds < 1:
            raise InvalidParameterError(f"每个规模的种子数必须至少为 1: {self.seeds}")
        if self.input_path is None and self.generator not in GENERATOR_KINDS:
            raise InvalidParameterError(f"未知的生成器类型: {self.generator}")
        if self.input_kind not in ("vectors", "graph"):
            raise InvalidParameterError(f"input_kind 必须是 vectors 或 graph: {self.input_kind}")
        if self.delimiter not in DELIMITERS:
            raise InvalidParameterError(f"delimiter 必须是 comma 或 whitespace: {self.delimiter}")
        if self.workers < 1:
            raise InvalidParameterError(f"workers 必须至少为 1: {self.workers}")

    def cells(self) -> List[Tuple[str, int, int]]:
        """全部 (algorithm, n, seed) 组合，按规模、种子、算法排列."""
        return [
            (algorithm, n, self.base_seed + s)
            for n in self.n_grid
            for s in range(self.seeds)
            for algorithm in self.algorithms
        ]
