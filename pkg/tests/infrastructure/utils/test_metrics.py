"""运行指标测试."""

import time
from concurrent.futures import ThreadPoolExecutor

import pytest

from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.infrastructure.utils.metrics import (
    MetricsCollector,
    get_metrics_collector,
    reset_metrics_collector,
)


class TestMetricsCollector:
    """测试 MetricsCollector."""

    @pytest.fixture
    def collector(self) -> MetricsCollector:
        """创建指标收集器."""
        return MetricsCollector()

    def test_init(self, collector: MetricsCollector) -> None:
        """测试初始化."""
        assert collector.get_counter("any") == 0
        assert collector.get_histogram("any") == []
        assert collector.last("any") == 0.0
        assert collector.last("any", default=-1.0) == -1.0

    def test_increment_counter(self, collector: MetricsCollector) -> None:
        """测试递增计数器."""
        collector.increment("runs.completed")
        collector.increment("runs.completed", value=5)

        assert collector.get_counter("runs.completed") == 6

    def test_record_histogram(self, collector: MetricsCollector) -> None:
        """测试记录直方图."""
        collector.record("trimed.distance_evals", 100.0)
        collector.record("trimed.distance_evals", 300.0)

        assert collector.get_histogram("trimed.distance_evals") == [100.0, 300.0]
        assert collector.last("trimed.distance_evals") == 300.0

    def test_get_histogram_stats(self, collector: MetricsCollector) -> None:
        """测试直方图统计."""
        for value in (10.0, 20.0, 30.0):
            collector.record("latency", value)

        stats = collector.get_histogram_stats("latency")

        assert stats == {"count": 3, "min": 10.0, "mean": 20.0, "median": 20.0, "max": 30.0}

    def test_get_histogram_stats_empty(self, collector: MetricsCollector) -> None:
        """测试空直方图统计."""
        assert collector.get_histogram_stats("nonexistent") == {"count": 0, "min": 0.0, "mean": 0.0, "median": 0.0, "max": 0.0}

    def test_timer_context_manager(self, collector: MetricsCollector) -> None:
        """测试计时器上下文管理器."""
        with collector.timer("wall_time"):
            time.sleep(0.05)

        data = collector.get_histogram("wall_time")
        assert len(data) == 1
        assert data[0] >= 0.05

    def test_timer_records_on_exception(self, collector: MetricsCollector) -> None:
        """测试异常时仍然记录耗时."""
        with pytest.raises(RuntimeError):
            with collector.timer("failing"):
                raise RuntimeError("boom")

        assert len(collector.get_histogram("failing")) == 1

    def test_thread_safety(self, collector: MetricsCollector) -> None:
        """测试多线程递增."""
        with ThreadPoolExecutor(max_workers=4) as executor:
            for _ in range(200):
                executor.submit(collector.increment, "cells")

        assert collector.get_counter("cells") == 200

    def test_histogram_capped(self) -> None:
        """测试直方图只保留最近 max_samples 个样本."""
        collector = MetricsCollector(max_samples=3)

        for value in range(10):
            collector.record("trimed.n_computed", value)

        assert collector.get_histogram("trimed.n_computed") == [7.0, 8.0, 9.0]
        assert collector.last("trimed.n_computed") == 9.0

    def test_rejects_invalid_cap(self) -> None:
        """测试样本上限必须为正."""
        with pytest.raises(InvalidParameterError):
            MetricsCollector(max_samples=0)

    def test_stats_frame(self, collector: MetricsCollector) -> None:
        """测试按算法汇总同名指标."""
        for value in (100.0, 300.0):
            collector.record("toprank.distance_evals", value)
        collector.record("trimed.distance_evals", 50.0)
        collector.record("trimed.wall_time", 0.5)

        frame = collector.stats_frame("distance_evals")

        assert list(frame["algorithm"]) == ["toprank", "trimed"]
        assert list(frame["count"]) == [2, 1]
        assert list(frame["mean"]) == [200.0, 50.0]
        assert collector.stats_frame("n_computed").empty

    def test_reset(self, collector: MetricsCollector) -> None:
        """测试重置."""
        collector.increment("runs.completed")
        collector.record("trimed.wall_time", 0.1)

        collector.reset()

        assert collector.get_counter("runs.completed") == 0
        assert collector.get_histogram("trimed.wall_time") == []
        assert collector.stats_frame("wall_time").empty


class TestGlobalCollector:
    """测试全局指标收集器."""

    def test_singleton(self) -> None:
        """测试返回同一个实例."""
        assert get_metrics_collector() is get_metrics_collector()

    def test_reset(self) -> None:
        """测试重置全局收集器."""
        collector = get_metrics_collector()
        collector.increment("global")
        reset_metrics_collector()

        assert collector.get_counter("global") == 0
