"""单次运行：执行一个算法并生成 RunRecord."""

import logging
from typing import Optional, Union

from medoidkit.bench.models.records import KMedoidsRunConfig, MedoidRunConfig, RunRecord
from medoidkit.clustering.services.checks import ClusterBoundChecker
from medoidkit.clustering.services.initializers import init_park, init_uniform
from medoidkit.clustering.services.kmeds import kmeds
from medoidkit.clustering.services.trikmeds import trikmeds
from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.infrastructure.utils.metrics import MetricsCollector
from medoidkit.medoid.models.bounds import TrimedConfig
from medoidkit.medoid.models.estimates import TopRankParams
from medoidkit.medoid.services.checks import EnergyBoundChecker
from medoidkit.medoid.services.ranking import rand_medoid, toprank, toprank2
from medoidkit.medoid.services.trimed import trimed
from medoidkit.metric.models.dataset import VectorDataset, WeightedGraph
from medoidkit.metric.services.energy import brute_force_medoid
from medoidkit.metric.services.oracle import DistanceOracle, make_oracle

logger = logging.getLogger(__name__)

Dataset = Union[VectorDataset, WeightedGraph]


def _shape(data: Dataset) -> dict:
    if isinstance(data, WeightedGraph):
        return {"n": data.n_nodes, "d": 0, "n_edges": data.n_edges}
    return {"n": data.n_points, "d": data.dim, "n_edges": 0}


CHECKED_N_LIMIT = 2000


def _reference_oracle(data: Dataset, algorithm: str, tolerance: float, symmetrize: bool = True) -> DistanceOracle:
    """为运行时边界检查构造独立的预言机，不影响被测算法的计数器."""
    reference = make_oracle(data, symmetrize=symmetrize)
    if reference.n > CHECKED_N_LIMIT:
        logger.warning(f"边界检查需要 O(N²) 的参考值，N={reference.n} 超过建议上限 {CHECKED_N_LIMIT}")
    logger.info(f"{algorithm} 启用运行时边界检查: tolerance={tolerance}")
    return reference


def _publish(collector: Optional[MetricsCollector], record: RunRecord) -> None:
    if collector is None:
        return
    collector.record(f"{record.algorithm}.wall_time", record.wall_time)
    collector.record(f"{record.algorithm}.distance_evals", record.distance_evals)
    collector.record(f"{record.algorithm}.n_computed", record.n_computed)
    collector.increment("runs.completed")


def run_medoid(
    data: Dataset, config: MedoidRunConfig, dataset_label: str = "", collector: Optional[MetricsCollector] = None
) -> RunRecord:
    """运行一次 medoid 算法.

    Args:
        data: 向量数据集或图
        config: 算法与参数
        dataset_label: 写入记录的数据集标识
        collector: 汇总指标的收集器（可选）

    Returns:
        RunRecord: 单条结果记录
    """
    oracle = make_oracle(data, symmetrize=config.symmetrize)
    timing = MetricsCollector()
    algorithm = config.algorithm
    energy_checker = None
    if config.check_tolerance is not None and algorithm == "trimed":
        reference = _reference_oracle(data, algorithm, config.check_tolerance, config.symmetrize)
        energy_checker = EnergyBoundChecker.from_oracle(reference, tolerance=config.check_tolerance)

    with timing.timer("wall_time"):
        if algorithm == "trimed":
            result = trimed(oracle, TrimedConfig(seed=config.seed, epsilon=config.epsilon), checker=energy_checker)
            indices = [result.index]
        elif algorithm == "brute":
            result = brute_force_medoid(oracle)
            indices = [result.index]
        elif algorithm == "rand":
            result = rand_medoid(oracle, l=config.n_anchors, seed=config.seed, epsilon=config.rand_epsilon)
            indices = [result.index]
        else:
            params = TopRankParams(
                k=config.k,
                alpha_prime=config.alpha_prime,
                anchor_constant=config.anchor_constant,
                n_anchors=config.n_anchors,
                l0=config.l0,
                q_incr=config.q_incr,
            )
            ranking = (toprank if algorithm == "toprank" else toprank2)(oracle, params, seed=config.seed)
            result = ranking.to_medoid_result()
            indices = ranking.indices

    shape = _shape(data)
    record = RunRecord(
        algorithm=algorithm,
        dataset=dataset_label,
        seed=config.seed,
        k=config.k,
        epsilon=config.epsilon if algorithm == "trimed" else 0.0,
        alpha_prime=config.alpha_prime if algorithm in ("toprank", "toprank2") else 0.0,
        n_computed=result.n_computed,
        distance_evals=result.distance_evals,
        result=";".join(str(i) for i in indices),
        objective=result.energy,
        wall_time=timing.last("wall_time"),
        iterations=0,
        evals_ratio=result.distance_evals / (shape["n"] ** 2),
        **shape,
    )
    _publish(collector, record)
    return record


def run_kmedoids(
    data: Dataset,
    config: KMedoidsRunConfig,
    dataset_label: str = "",
    baseline: Optional[RunRecord] = None,
    collector: Optional[MetricsCollector] = None,
) -> RunRecord:
    """运行一次 K-medoids 算法.

    distance_evals 包含初始化的开销（Park 初始化为平方级），不包含最终目标值的复核。
    提供 ε = 0 的基线记录时同时给出 φ_c 与 φ_E。

    Args:
        data: 向量数据集或图
        config: 算法与参数
        dataset_label: 写入记录的数据集标识
        baseline: 同一数据与种子上 ε = 0 的记录
        collector: 汇总指标的收集器（可选）

    Returns:
        RunRecord: 单条结果记录

    Raises:
        InvalidParameterError: K 超过元素个数
    """
    oracle = make_oracle(data)
    n = oracle.n
    if config.K > n:
        raise InvalidParameterError(f"K={config.K} 超过元素个数 {n}")
    timing = MetricsCollector()
    cluster_checker = None
    if config.check_tolerance is not None and config.algorithm == "trikmeds":
        reference = _reference_oracle(data, config.algorithm, config.check_tolerance)
        cluster_checker = ClusterBoundChecker.from_oracle(reference, tolerance=config.check_tolerance)

    with timing.timer("wall_time"):
        evals_before = oracle.eval_counter
        matrix = None
        if config.init == "park":
            logger.info(f"Park 初始化需要完整距离矩阵 ({n}×{n})")
            matrix = oracle.full_matrix()
            init = init_park(oracle, config.K, matrix=matrix)
        else:
            init = init_uniform(n, config.K, config.seed)
        init_evals = oracle.eval_counter - evals_before

        if config.algorithm == "kmeds":
            result = kmeds(oracle, config.K, init=init, max_iters=config.max_iters, matrix=matrix)
        else:
            result = trikmeds(
                oracle,
                config.K,
                epsilon=config.epsilon,
                init=init,
                seed=config.seed,
                max_iters=config.max_iters,
                checker=cluster_checker,
            )

    distance_evals = init_evals + result.distance_evals
    phi_c = phi_E = None
    if baseline is not None:
        phi_c = distance_evals / baseline.distance_evals if baseline.distance_evals > 0 else None
        phi_E = result.objective / baseline.objective if baseline.objective > 0 else None

    shape = _shape(data)
    record = RunRecord(
        algorithm=config.algorithm,
        dataset=dataset_label,
        seed=config.seed,
        k=config.K,
        epsilon=result.epsilon,
        alpha_prime=0.0,
        n_computed=0,
        distance_evals=distance_evals,
        result=";".join(str(m) for m in result.medoids),
        objective=result.objective,
        wall_time=timing.last("wall_time"),
        iterations=result.iterations,
        evals_ratio=distance_evals / (n * n),
        phi_c=phi_c,
        phi_E=phi_E,
        **shape,
    )
    _publish(collector, record)
    return record
