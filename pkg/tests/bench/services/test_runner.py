"""单次运行测试."""

from unittest.mock import patch

import pytest

from medoidkit.bench.models.records import KMedoidsRunConfig, MedoidRunConfig
from medoidkit.bench.services.runner import run_kmedoids, run_medoid
from medoidkit.clustering.services.checks import ClusterBoundChecker
from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.infrastructure.utils.metrics import MetricsCollector
from medoidkit.medoid.services.checks import EnergyBoundChecker
from medoidkit.metric.models.dataset import VectorDataset
from medoidkit.metric.services.energy import brute_force_medoid
from medoidkit.metric.services.oracle import make_oracle


class TestRunMedoid:
    """测试 medoid 运行."""

    @pytest.mark.parametrize("algorithm", ["trimed", "brute", "rand", "toprank", "toprank2"])
    def test_line_points(self, line_points: VectorDataset, algorithm: str) -> None:
        """测试各算法在 {0, 1, 5} 上都返回元素 1."""
        record = run_medoid(line_points, MedoidRunConfig(algorithm=algorithm), "line")

        assert record.ok
        assert record.algorithm == algorithm
        assert record.dataset == "line"
        assert (record.n, record.d, record.n_edges) == (3, 1, 0)
        assert record.result_indices() == [1]
        assert record.objective == pytest.approx(5.0 / 3.0)
        assert record.evals_ratio == pytest.approx(record.distance_evals / 9)

    def test_brute_record(self, line_points: VectorDataset) -> None:
        """测试暴力求解的计数."""
        record = run_medoid(line_points, MedoidRunConfig(algorithm="brute"))

        assert record.n_computed == 3
        assert record.distance_evals == 9
        assert record.evals_ratio == 1.0
        assert record.wall_time >= 0.0

    def test_trimed_matches_brute(self, vector_factory) -> None:
        """测试 trimed 记录与暴力求解一致，参数写入记录."""
        data = vector_factory(500, 3, seed=2)
        expected = brute_force_medoid(make_oracle(data))

        record = run_medoid(data, MedoidRunConfig(algorithm="trimed", seed=4))

        assert record.result_indices() == [expected.index]
        assert record.objective == expected.energy
        assert record.n_computed < 500
        assert record.seed == 4
        assert record.alpha_prime == 0.0

    def test_toprank_k(self, vector_factory) -> None:
        """测试 top-k 写入多个编号."""
        record = run_medoid(
            vector_factory(300, 2, seed=3), MedoidRunConfig(algorithm="toprank", k=3, alpha_prime=2.0, seed=1)
        )

        assert len(record.result_indices()) == 3
        assert record.k == 3
        assert record.alpha_prime == 2.0
        assert record.epsilon == 0.0

    def test_graph_input(self, graph_factory) -> None:
        """测试图输入记录边数与维数 0."""
        graph = graph_factory(40, seed=1, extra_edges=20)

        record = run_medoid(graph, MedoidRunConfig(algorithm="trimed"), "graph")

        assert record.d == 0
        assert record.n == 40
        assert record.n_edges == graph.n_edges

    def test_publishes_metrics(self, line_points: VectorDataset) -> None:
        """测试向收集器发布指标."""
        collector = MetricsCollector()

        run_medoid(line_points, MedoidRunConfig(algorithm="brute"), collector=collector)
        run_medoid(line_points, MedoidRunConfig(algorithm="brute"), collector=collector)

        assert collector.get_counter("runs.completed") == 2
        assert collector.get_histogram("brute.distance_evals") == [9, 9]
        assert collector.get_histogram_stats("brute.wall_time")["count"] == 2

    def test_rejects_unknown_algorithm(self) -> None:
        """测试未知算法."""
        with pytest.raises(InvalidParameterError):
            MedoidRunConfig(algorithm="pam")


class TestRunKMedoids:
    """测试 K-medoids 运行."""

    def test_same_result_for_both_algorithms(self, vector_factory) -> None:
        """测试 kmeds 与 ε=0 的 trikmeds 给出相同结果，trikmeds 计算更少."""
        data = vector_factory(400, 2, seed=5)

        kmeds_record = run_kmedoids(data, KMedoidsRunConfig(algorithm="kmeds", K=8, seed=2))
        trikmeds_record = run_kmedoids(data, KMedoidsRunConfig(algorithm="trikmeds", K=8, seed=2))

        assert trikmeds_record.result_indices() == kmeds_record.result_indices()
        assert trikmeds_record.objective == pytest.approx(kmeds_record.objective, rel=1e-12)
        assert trikmeds_record.distance_evals < kmeds_record.distance_evals
        assert kmeds_record.k == 8
        assert kmeds_record.iterations >= 1

    def test_park_init_counts_matrix(self, vector_factory) -> None:
        """测试 Park 初始化的距离计算计入记录."""
        data = vector_factory(100, 2, seed=6)

        record = run_kmedoids(data, KMedoidsRunConfig(algorithm="kmeds", K=4, init="park"))

        assert record.distance_evals == 100 * 99 // 2

    def test_baseline_ratios(self, vector_factory) -> None:
        """测试相对基线的 φ_c 与 φ_E."""
        data = vector_factory(300, 2, seed=7)
        baseline = run_kmedoids(data, KMedoidsRunConfig(algorithm="trikmeds", K=6, seed=3))

        record = run_kmedoids(
            data, KMedoidsRunConfig(algorithm="trikmeds", K=6, seed=3, epsilon=0.1), baseline=baseline
        )

        assert record.epsilon == 0.1
        assert record.phi_c == pytest.approx(record.distance_evals / baseline.distance_evals)
        assert record.phi_E == pytest.approx(record.objective / baseline.objective)
        assert baseline.phi_c is None

    def test_rejects_large_k(self, line_points: VectorDataset) -> None:
        """测试 K 超过元素个数."""
        with pytest.raises(InvalidParameterError):
            run_kmedoids(line_points, KMedoidsRunConfig(algorithm="kmeds", K=4))

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"algorithm": "clara", "K": 2},
            {"algorithm": "kmeds", "K": 0},
            {"algorithm": "trikmeds", "K": 2, "check_tolerance": -1.0},
        ],
    )
    def test_rejects_config(self, kwargs) -> None:
        """测试非法配置."""
        with pytest.raises(InvalidParameterError):
            KMedoidsRunConfig(**kwargs)

    def test_rejects_init(self) -> None:
        """测试未知初始化方法."""
        with pytest.raises(InvalidParameterError):
            KMedoidsRunConfig(algorithm="kmeds", K=2, init="kmeans++")


class TestBoundChecks:
    """测试运行时边界检查的挂接."""

    def test_trimed_checked(self, vector_factory) -> None:
        """测试检查器以给定容差构造，且不改变结果与计数."""
        data = vector_factory(150, 2, seed=6)
        plain = run_medoid(data, MedoidRunConfig(algorithm="trimed", seed=1))

        with patch.object(EnergyBoundChecker, "from_oracle", wraps=EnergyBoundChecker.from_oracle) as built:
            checked = run_medoid(data, MedoidRunConfig(algorithm="trimed", seed=1, check_tolerance=1e-6))

        assert built.call_count == 1
        assert built.call_args.kwargs["tolerance"] == 1e-6
        assert checked.result == plain.result
        assert checked.distance_evals == plain.distance_evals

    def test_trikmeds_checked(self, vector_factory) -> None:
        """测试 trikmeds 的检查器以给定容差构造，且不改变结果与计数."""
        data = vector_factory(200, 2, seed=7)
        config = {"algorithm": "trikmeds", "K": 4, "seed": 2, "epsilon": 0.05}
        plain = run_kmedoids(data, KMedoidsRunConfig(**config))

        with patch.object(ClusterBoundChecker, "from_oracle", wraps=ClusterBoundChecker.from_oracle) as built:
            checked = run_kmedoids(data, KMedoidsRunConfig(**config, check_tolerance=1e-8))

        assert built.call_args.kwargs["tolerance"] == 1e-8
        assert checked.result == plain.result
        assert checked.distance_evals == plain.distance_evals

    def test_other_algorithms_unchecked(self, line_points: VectorDataset) -> None:
        """测试只有 trimed 与 trikmeds 挂接检查器."""
        with patch.object(EnergyBoundChecker, "from_oracle") as built:
            run_medoid(line_points, MedoidRunConfig(algorithm="toprank", check_tolerance=1e-9))

        built.assert_not_called()

    def test_rejects_negative_tolerance(self) -> None:
        """测试容差必须非负."""
        with pytest.raises(InvalidParameterError):
            MedoidRunConfig(algorithm="trimed", check_tolerance=-1e-9)
