"""合成数据生成器.

全部生成器只依赖 (参数, 种子)，使用 numpy 的 PCG64 生成器（``np.random.default_rng``），
高斯样本由其标准正态变换得到。
"""

import logging
import math
from typing import Union

import networkx as nx
import numpy as np
from scipy.spatial import cKDTree

from medoidkit.datagen.models.spec import GenSpec
from medoidkit.infrastructure.exceptions import DisconnectedGraphError, GeneratorError, InvalidParameterError
from medoidkit.metric.models.dataset import VectorDataset, WeightedGraph
from medoidkit.metric.services.oracle import validate_connectivity

logger = logging.getLogger(__name__)


def _check_shape(n: int, d: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n 必须至少为 1: {n}")
    if d < 1:
        raise InvalidParameterError(f"d 必须至少为 1: {d}")


def _unit_directions(rng: np.random.Generator, count: int, d: int) -> np.ndarray:
    """标准正态向量归一化得到的均匀方向，范数为 0 的样本重新抽取."""
    x = rng.standard_normal((count, d))
    norms = np.linalg.norm(x, axis=1)
    zero = norms == 0
    while zero.any():
        x[zero] = rng.standard_normal((int(zero.sum()), d))
        norms[zero] = np.linalg.norm(x[zero], axis=1)
        zero = norms == 0
    return x / norms[:, None]


def sample_uniform_cube(n: int, d: int, seed: int = 0) -> VectorDataset:
    """[0, 1]^d 内的独立均匀样本."""
    _check_shape(n, d)
    rng = np.random.default_rng(seed)
    return VectorDataset(values=rng.random((n, d)), source=f"uniform_cube-n{n}-d{d}-s{seed}")


def sample_ball_uniform(n: int, d: int, seed: int = 0) -> VectorDataset:
    """单位球内的均匀样本：方向取归一化的标准正态向量，半径取 U^{1/d}."""
    _check_shape(n, d)
    rng = np.random.default_rng(seed)
    points = _unit_directions(rng, n, d) * (rng.random(n) ** (1.0 / d))[:, None]
    return VectorDataset(values=points, source=f"ball_uniform-n{n}-d{d}-s{seed}")


def sample_ball_skewed(n: int, d: int, p_keep: float = 0.1, seed: int = 0) -> VectorDataset:
    """内层密度降低的单位球样本.

    先按均匀球抽样；范数不超过 (1/2)^{1/d} 的内层点以概率 p_keep 保留，否则在外环
    ((1/2)^{1/d}, 1] 内重新均匀抽取。p_keep = 1/10 时内外层密度之比为 1:19。

    Args:
        n: 点数
        d: 维数
        p_keep: 内层点保留概率，(0, 1]
        seed: 随机种子

    Returns:
        VectorDataset
    """
    _check_shape(n, d)
    if not 0.0 < p_keep <= 1.0:
        raise InvalidParameterError(f"p_keep 必须在 (0, 1] 内: {p_keep}")
    rng = np.random.default_rng(seed)
    points = _unit_directions(rng, n, d) * (rng.random(n) ** (1.0 / d))[:, None]

    inner_radius = 0.5 ** (1.0 / d)
    inner = np.linalg.norm(points, axis=1) <= inner_radius
    resample = inner & (rng.random(n) >= p_keep)
    count = int(resample.sum())
    if count:
        radii = (0.5 + 0.5 * rng.random(count)) ** (1.0 / d)
        points[resample] = _unit_directions(rng, count, d) * radii[:, None]
    logger.debug(f"偏斜球: 重新抽取 {count}/{n} 个内层点")
    return VectorDataset(values=points, source=f"ball_skewed-p{p_keep:g}-n{n}-d{d}-s{seed}")


def largest_component(graph: WeightedGraph) -> WeightedGraph:
    """保留最大连通分量（有向时为最大强连通分量）的导出子图.

    保留的节点按原编号递增重新编号，坐标随之裁剪；metadata 记录生成时的节点数。

    Args:
        graph: 带权图

    Returns:
        WeightedGraph: 连通（有向时强连通）的子图
    """
    if graph.n_nodes == 0:
        return graph
    nx_graph = graph.to_networkx()
    components = nx.strongly_connected_components(nx_graph) if graph.directed else nx.connected_components(nx_graph)
    keep = np.array(sorted(max(components, key=len)), dtype=np.intp)
    relabel = np.full(graph.n_nodes, -1, dtype=np.intp)
    relabel[keep] = np.arange(keep.size)

    edges = [(int(relabel[u]), int(relabel[v]), w) for u, v, w in graph.edges if relabel[u] >= 0 and relabel[v] >= 0]
    coordinates = graph.coordinates[keep] if graph.coordinates is not None else None
    metadata = {**graph.metadata, "n_generated": graph.n_nodes}
    logger.info(f"保留最大连通分量: {keep.size}/{graph.n_nodes} 个节点, {len(edges)}/{graph.n_edges} 条边")
    return WeightedGraph(
        n_nodes=int(keep.size), edges=edges, directed=graph.directed, coordinates=coordinates, metadata=metadata
    )


def gen_sensor_graph(
    n: int,
    radius_const: float = 1.25,
    directed: bool = False,
    seed: int = 0,
    max_retries: int = 20,
    keep_largest: bool = False,
) -> WeightedGraph:
    """随机几何传感器网络.

    单位正方形内 n 个均匀点，距离小于 radius_const/√n 的点对之间连边，权重为欧氏距离；
    有向时每条边随机取一个方向。不连通（有向时不强连通）则种子加一重新生成。
    平均度数约为 π·radius_const²，低于 ln n 时整图几乎不可能连通，此时应使用 keep_largest。

    Args:
        n: 节点数
        radius_const: 半径常数 c
        directed: 是否有向
        seed: 初始随机种子
        max_retries: 最大重试次数
        keep_largest: 不重试，直接保留最大（强）连通分量，节点数可能少于 n

    Returns:
        WeightedGraph: 保留节点坐标，metadata 记录重试次数、实际种子与半径

    Raises:
        GeneratorError: 重试用尽仍不连通
    """
    if n < 1:
        raise InvalidParameterError(f"n 必须至少为 1: {n}")
    if not radius_const > 0:
        raise InvalidParameterError(f"radius_const 必须为正: {radius_const}")

    radius = radius_const / math.sqrt(n)
    for attempt in range(max_retries + 1):
        current_seed = seed + attempt
        rng = np.random.default_rng(current_seed)
        coordinates = rng.random((n, 2))

        pairs = cKDTree(coordinates).query_pairs(r=radius, output_type="ndarray")
        pairs = pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))] if len(pairs) else np.zeros((0, 2), dtype=np.intp)
        weights = np.linalg.norm(coordinates[pairs[:, 0]] - coordinates[pairs[:, 1]], axis=1)
        keep = weights < radius
        pairs, weights = pairs[keep], weights[keep]
        if directed and len(pairs):
            flip = rng.random(len(pairs)) < 0.5
            pairs[flip] = pairs[flip][:, ::-1]

        graph = WeightedGraph(
            n_nodes=n,
            edges=[(int(u), int(v), float(w)) for (u, v), w in zip(pairs, weights)],
            directed=directed,
            coordinates=coordinates,
            metadata={"retries": attempt, "seed_used": current_seed, "radius": radius},
        )
        if keep_largest:
            return largest_component(graph)
        try:
            validate_connectivity(graph)
        except DisconnectedGraphError as e:
            logger.warning(f"传感器图不连通 (seed={current_seed}): {e}，重新生成")
            continue
        logger.info(f"传感器图生成完成: n={n}, n_edges={graph.n_edges}, directed={directed}, retries={attempt}")
        return graph

    raise GeneratorError(
        f"传感器图在 {max_retries + 1} 次尝试后仍不连通 (n={n}, radius_const={radius_const})，请增大 radius_const"
    )


def generate(
    spec: GenSpec, undirected_radius: float = 1.25, directed_radius: float = 1.45
) -> Union[VectorDataset, WeightedGraph]:
    """按规格生成数据集.

    Args:
        spec: 生成器规格
        undirected_radius: 未指定半径常数时无向图的缺省值
        directed_radius: 未指定半径常数时有向图的缺省值

    Returns:
        VectorDataset 或 WeightedGraph，metadata 中记录规格
    """
    if spec.kind == "uniform_cube":
        data = sample_uniform_cube(spec.n, spec.dim, spec.seed)
    elif spec.kind == "ball_uniform":
        data = sample_ball_uniform(spec.n, spec.dim, spec.seed)
    elif spec.kind == "ball_skewed":
        data = sample_ball_skewed(spec.n, spec.dim, spec.p_keep, spec.seed)
    else:
        data = gen_sensor_graph(
            spec.n,
            radius_const=spec.resolved_radius_const(undirected_radius, directed_radius),
            directed=spec.directed,
            seed=spec.seed,
            max_retries=spec.max_retries,
            keep_largest=spec.keep_largest,
        )
    data.metadata["spec"] = spec.to_dict()
    return data
