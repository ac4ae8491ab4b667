"""测试共用的数据构造 fixture."""

from typing import Callable

import numpy as np
import pytest

from medoidkit.metric.models.dataset import VectorDataset, WeightedGraph


def build_connected_graph(n: int, seed: int, directed: bool = False, extra_edges: int = 0) -> WeightedGraph:
    """随机连通图：无向时为随机生成树加额外边，有向时为随机权重的环加额外弧."""
    rng = np.random.default_rng(seed)
    edges = []
    if directed:
        cycle = rng.permutation(n)
        for u, v in zip(cycle, np.roll(cycle, -1)):
            if u != v:
                edges.append((int(u), int(v), float(rng.uniform(0.1, 2.0))))
    else:
        for v in range(1, n):
            edges.append((int(rng.integers(0, v)), v, float(rng.uniform(0.1, 2.0))))
    for _ in range(extra_edges):
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u != v:
            edges.append((u, v, float(rng.uniform(0.1, 2.0))))
    return WeightedGraph(n_nodes=n, edges=edges, directed=directed)


@pytest.fixture
def graph_factory() -> Callable[..., WeightedGraph]:
    """随机连通图构造器."""
    return build_connected_graph


@pytest.fixture
def vector_factory() -> Callable[..., VectorDataset]:
    """[0, 1]^d 均匀随机向量构造器."""

    def _build(n: int, d: int = 2, seed: int = 0) -> VectorDataset:
        return VectorDataset(values=np.random.default_rng(seed).random((n, d)))

    return _build


@pytest.fixture
def line_points() -> VectorDataset:
    """一维三点 {0, 1, 5}."""
    return VectorDataset.from_rows([[0.0], [1.0], [5.0]])
