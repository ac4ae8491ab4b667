"""合成数据生成器测试."""

from pathlib import Path

import numpy as np
import pytest

from medoidkit.datagen.models.spec import SKEWED_PRESETS, GenSpec
from medoidkit.datagen.services.generators import (
    gen_sensor_graph,
    generate,
    largest_component,
    sample_ball_skewed,
    sample_ball_uniform,
    sample_uniform_cube,
)
from medoidkit.datagen.services.writer import read_sidecar, write_dataset
from medoidkit.infrastructure.exceptions import GeneratorError, InvalidParameterError
from medoidkit.metric.models.dataset import VectorDataset, WeightedGraph
from medoidkit.metric.services.loader import load_graph, load_vectors
from medoidkit.metric.services.oracle import validate_connectivity


class TestVectorGenerators:
    """测试向量生成器."""

    def test_uniform_cube_range(self) -> None:
        """测试均匀立方体样本在 [0, 1]^d 内."""
        data = sample_uniform_cube(1000, 3, seed=1)

        assert data.values.shape == (1000, 3)
        assert np.all((data.values >= 0.0) & (data.values <= 1.0))

    def test_deterministic(self) -> None:
        """测试相同种子结果相同."""
        np.testing.assert_array_equal(sample_ball_uniform(50, 4, 7).values, sample_ball_uniform(50, 4, 7).values)
        assert not np.array_equal(sample_uniform_cube(50, 2, 1).values, sample_uniform_cube(50, 2, 2).values)

    def test_ball_uniform_radius_distribution(self) -> None:
        """测试均匀球：全部在单位球内，内层 (1/2)^{1/d} 球约占一半."""
        d = 3
        norms = np.linalg.norm(sample_ball_uniform(20_000, d, seed=2).values, axis=1)

        assert np.all(norms <= 1.0)
        assert np.mean(norms <= 0.5 ** (1.0 / d)) == pytest.approx(0.5, abs=0.02)

    def test_ball_skewed_inner_fraction(self) -> None:
        """测试偏斜球：内层比例约为 p/2，即密度比 1:19."""
        d = 2
        p_keep = SKEWED_PRESETS["skewed-19x"]
        norms = np.linalg.norm(sample_ball_skewed(40_000, d, p_keep, seed=3).values, axis=1)

        assert np.all(norms <= 1.0)
        assert np.mean(norms <= 0.5 ** (1.0 / d)) == pytest.approx(0.05, abs=0.01)

    def test_ball_skewed_keep_all(self) -> None:
        """测试 p_keep = 1 时与均匀球的径向分布一致."""
        norms = np.linalg.norm(sample_ball_skewed(20_000, 2, 1.0, seed=4).values, axis=1)

        assert np.mean(norms <= 0.5**0.5) == pytest.approx(0.5, abs=0.02)

    @pytest.mark.parametrize("n, d", [(0, 2), (5, 0)])
    def test_rejects_shape(self, n: int, d: int) -> None:
        """测试拒绝非法形状."""
        with pytest.raises(InvalidParameterError):
            sample_uniform_cube(n, d)

    def test_rejects_p_keep(self) -> None:
        """测试拒绝非法保留概率."""
        with pytest.raises(InvalidParameterError):
            sample_ball_skewed(10, 2, 0.0)


class TestSensorGraph:
    """测试传感器图生成器."""

    def test_undirected(self) -> None:
        """测试无向图连通，边长小于半径且等于坐标距离."""
        graph = gen_sensor_graph(500, radius_const=3.0, seed=1)
        radius = 3.0 / np.sqrt(500)

        validate_connectivity(graph)
        assert graph.n_nodes == 500
        assert graph.metadata["radius"] == pytest.approx(radius)
        for u, v, w in graph.edges:
            assert u < v
            assert w < radius
            assert w == pytest.approx(np.linalg.norm(graph.coordinates[u] - graph.coordinates[v]))

    def test_all_close_pairs_connected(self) -> None:
        """测试距离小于半径的点对都有边."""
        graph = gen_sensor_graph(200, radius_const=3.0, seed=2)
        coords = graph.coordinates
        distances = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=2)
        expected = int(np.count_nonzero(np.triu(distances < graph.metadata["radius"], k=1)))

        assert graph.n_edges == expected

    def test_directed_strongly_connected(self) -> None:
        """测试有向图强连通."""
        graph = gen_sensor_graph(300, radius_const=3.5, directed=True, seed=3)

        assert graph.directed
        validate_connectivity(graph)
        assert graph.metadata["seed_used"] == 3 + graph.metadata["retries"]

    def test_retries_exhausted(self) -> None:
        """测试半径过小时重试用尽."""
        with pytest.raises(GeneratorError):
            gen_sensor_graph(200, radius_const=0.05, seed=0, max_retries=2)

    def test_single_node(self) -> None:
        """测试单节点图."""
        graph = gen_sensor_graph(1)

        assert graph.n_nodes == 1
        assert graph.edges == []

    def test_mean_degree(self) -> None:
        """测试 n=10⁴、c=1.25 时最大连通分量的平均度数在 π·1.25² 的两倍范围内."""
        expected = np.pi * 1.25**2

        graph = gen_sensor_graph(10_000, radius_const=1.25, seed=0, keep_largest=True)

        validate_connectivity(graph)
        assert graph.metadata["n_generated"] == 10_000
        assert 1 < graph.n_nodes <= 10_000
        assert graph.coordinates.shape == (graph.n_nodes, 2)
        assert expected / 2 <= 2 * graph.n_edges / graph.n_nodes <= expected * 2

    def test_largest_directed(self) -> None:
        """测试有向图保留最大强连通分量，边权仍为点间距离."""
        graph = gen_sensor_graph(2000, radius_const=1.45, directed=True, seed=4, keep_largest=True)

        validate_connectivity(graph)
        assert graph.directed
        for u, v, w in graph.edges[:200]:
            assert w == pytest.approx(np.linalg.norm(graph.coordinates[u] - graph.coordinates[v]))


class TestLargestComponent:
    """测试最大连通分量的提取."""

    def test_undirected(self) -> None:
        """测试保留 {2, 3, 4} 并按原编号顺序重新编号."""
        graph = WeightedGraph(n_nodes=5, edges=[(0, 1, 1.0), (3, 4, 2.0), (2, 3, 1.0)])

        result = largest_component(graph)

        assert result.n_nodes == 3
        assert result.edges == [(1, 2, 2.0), (0, 1, 1.0)]
        assert result.metadata["n_generated"] == 5

    def test_directed_uses_strong_components(self) -> None:
        """测试有向图按强连通分量取舍."""
        graph = WeightedGraph(n_nodes=3, edges=[(0, 1, 1.0), (1, 0, 1.0), (1, 2, 1.0)], directed=True)

        result = largest_component(graph)

        assert result.n_nodes == 2
        assert result.edges == [(0, 1, 1.0), (1, 0, 1.0)]

    def test_connected_graph_unchanged(self) -> None:
        """测试连通图保持不变."""
        graph = gen_sensor_graph(300, radius_const=3.0, seed=1)

        result = largest_component(graph)

        assert result.n_nodes == graph.n_nodes
        assert result.edges == graph.edges
        np.testing.assert_array_equal(result.coordinates, graph.coordinates)


class TestGenerate:
    """测试按规格生成."""

    def test_dispatch(self) -> None:
        """测试按类型分派并记录规格."""
        spec = GenSpec(kind="ball_skewed", n=100, dim=3, p_keep=0.01, seed=5)

        data = generate(spec)

        assert isinstance(data, VectorDataset)
        np.testing.assert_array_equal(data.values, sample_ball_skewed(100, 3, 0.01, 5).values)
        assert data.metadata["spec"]["p_keep"] == 0.01

    def test_sensor_graph_default_radius(self) -> None:
        """测试有向传感器图使用有向缺省半径."""
        spec = GenSpec(kind="sensor_graph", n=200, directed=True, seed=1)

        graph = generate(spec, undirected_radius=1.25, directed_radius=3.5)

        assert isinstance(graph, WeightedGraph)
        assert graph.metadata["radius"] == pytest.approx(3.5 / np.sqrt(200))


class TestWriter:
    """测试数据落盘."""

    def test_vectors_round_trip(self, tmp_path: Path) -> None:
        """测试向量文件读回后逐位一致."""
        spec = GenSpec(kind="ball_uniform", n=40, dim=3, seed=2)
        data = generate(spec)

        data_path, sidecar_path = write_dataset(data, spec, tmp_path)

        assert data_path.name == f"{spec.label()}.txt"
        np.testing.assert_array_equal(load_vectors(data_path).values, data.values)
        assert read_sidecar(sidecar_path)["kind"] == "ball_uniform"

    def test_graph_round_trip(self, tmp_path: Path) -> None:
        """测试边列表读回后一致，元数据记录边数."""
        spec = GenSpec(kind="sensor_graph", n=120, radius_const=3.0, seed=4)
        graph = generate(spec)

        data_path, sidecar_path = write_dataset(graph, spec, tmp_path)

        loaded = load_graph(data_path)
        assert loaded.n_nodes == graph.n_nodes
        assert loaded.edges == graph.edges
        sidecar = read_sidecar(sidecar_path)
        assert int(sidecar["n_edges"]) == graph.n_edges
        assert int(sidecar["retries"]) == graph.metadata["retries"]


class TestGenSpec:
    """测试生成器规格."""

    def test_labels(self) -> None:
        """测试标识."""
        assert GenSpec(kind="uniform_cube", n=10, dim=2, seed=1).label() == "uniform_cube-n10-d2-s1"
        assert GenSpec(kind="sensor_graph", n=10, directed=True).label() == "sensor_graph-d-n10-s0"
        assert GenSpec(kind="sensor_graph", n=10, keep_largest=True).label() == "sensor_graph-u-lcc-n10-s0"
        assert GenSpec(kind="ball_skewed", n=10, p_keep=0.1).label() == "ball_skewed-p0.1-n10-d2-s0"

    def test_dict_round_trip(self) -> None:
        """测试字典往返，忽略未知键."""
        spec = GenSpec(kind="ball_uniform", n=30, dim=4, seed=9)

        assert GenSpec.from_dict({**spec.to_dict(), "extra": 1}) == spec

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"kind": "gaussian", "n": 10},
            {"kind": "uniform_cube", "n": 0},
            {"kind": "ball_skewed", "n": 10, "p_keep": 1.5},
            {"kind": "sensor_graph", "n": 10, "radius_const": 0.0},
        ],
    )
    def test_validation(self, kwargs) -> None:
        """测试参数校验."""
        with pytest.raises(InvalidParameterError):
            GenSpec(**kwargs)

    def test_resolved_radius(self) -> None:
        """测试缺省半径常数."""
        assert GenSpec(kind="sensor_graph", n=10).resolved_radius_const() == 1.25
        assert GenSpec(kind="sensor_graph", n=10, directed=True).resolved_radius_const() == 1.45
        assert GenSpec(kind="sensor_graph", n=10, radius_const=2.0).resolved_radius_const() == 2.0


class TestSensorGraphPair:
    """测试两节点传感器图."""

    def test_single_edge(self) -> None:
        """测试半径足够大时两点之间恰好一条边，权重为点间距离."""
        graph = gen_sensor_graph(2, radius_const=100.0, seed=6)

        assert graph.n_edges == 1
        u, v, w = graph.edges[0]
        assert (u, v) == (0, 1)
        assert w == np.linalg.norm(graph.coordinates[0] - graph.coordinates[1])
