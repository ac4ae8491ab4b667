"""运行指标收集模块.

基准运行器把每次运行的耗时、距离计算次数与被计算元素数按 ``<算法>.<指标>`` 记入直方图，
扫描命令结束时按算法打印这些直方图的统计。距离计算次数的权威来源是 ``DistanceOracle``
的计数器，这里只做汇总。
"""

import threading
import time
from collections import deque
from contextlib import contextmanager
from typing import Deque, Dict, Generator, List, Optional

import numpy as np
import pandas as pd

from medoidkit.infrastructure.exceptions import InvalidParameterError
from medoidkit.infrastructure.utils.logger import get_logger

logger = get_logger(__name__)

STATS_COLUMNS = ["count", "min", "mean", "median", "max"]


class MetricsCollector:
    """指标收集器.

    计数器、直方图和计时器，可在多个工作线程间共享。每个直方图只保留最近
    ``max_samples`` 个样本。

    Args:
        max_samples: 每个直方图保留的样本上限

    Examples:
        >>> collector = MetricsCollector()
        >>> with collector.timer("trimed.wall_time"):
        ...     pass
        >>> collector.record("trimed.n_computed", 123)
        >>> stats = collector.get_histogram_stats("trimed.n_computed")
    """

    def __init__(self, max_samples: int = 100_000) -> None:
        if max_samples < 1:
            raise InvalidParameterError(f"max_samples 必须至少为 1: {max_samples}")
        self.max_samples = max_samples
        self._lock = threading.Lock()
        self._counters: Dict[str, int] = {}
        self._histograms: Dict[str, Deque[float]] = {}

    def increment(self, name: str, value: int = 1) -> None:
        """递增计数器.

        Args:
            name: 指标名称
            value: 递增值
        """
        with self._lock:
            self._counters[name] = self._counters.get(name, 0) + value
            current = self._counters[name]

        logger.debug(f"计数器递增: {name}={current}")

    def record(self, name: str, value: float) -> None:
        """记录直方图样本.

        Args:
            name: 指标名称
            value: 值
        """
        with self._lock:
            samples = self._histograms.get(name)
            if samples is None:
                samples = self._histograms[name] = deque(maxlen=self.max_samples)
            samples.append(float(value))

        logger.debug(f"记录样本: {name}={value}")

    @contextmanager
    def timer(self, name: str) -> Generator[None, None, None]:
        """计时器上下文管理器，以秒为单位记入直方图 ``name``.

        Args:
            name: 指标名称

        Yields:
            None
        """
        start_time = time.perf_counter()
        try:
            yield
        finally:
            self.record(name, time.perf_counter() - start_time)

    def get_counter(self, name: str) -> int:
        """获取计数器值."""
        with self._lock:
            return self._counters.get(name, 0)

    def get_histogram(self, name: str) -> List[float]:
        """获取直方图样本（副本）."""
        with self._lock:
            return list(self._histograms.get(name, ()))

    def last(self, name: str, default: float = 0.0) -> float:
        """获取直方图最近一次记录的值.

        Args:
            name: 指标名称
            default: 无记录时的返回值

        Returns:
            最近一次记录的值
        """
        with self._lock:
            samples = self._histograms.get(name)
            return samples[-1] if samples else default

    def get_histogram_stats(self, name: str) -> Dict[str, float]:
        """获取直方图统计信息.

        Args:
            name: 指标名称

        Returns:
            统计信息（count, min, mean, median, max），无样本时全部为 0
        """
        data = np.asarray(self.get_histogram(name), dtype=np.float64)
        if data.size == 0:
            return dict.fromkeys(STATS_COLUMNS, 0.0) | {"count": 0}
        return {
            "count": int(data.size),
            "min": float(data.min()),
            "mean": float(data.mean()),
            "median": float(np.median(data)),
            "max": float(data.max()),
        }

    def stats_frame(self, metric: str) -> pd.DataFrame:
        """按算法汇总名为 ``<算法>.<metric>`` 的直方图.

        Args:
            metric: 指标名，例如 ``wall_time`` 或 ``distance_evals``

        Returns:
            pd.DataFrame: 每个算法一行，列为 algorithm 与 ``STATS_COLUMNS``，按算法名排序
        """
        suffix = f".{metric}"
        with self._lock:
            names = sorted(name for name in self._histograms if name.endswith(suffix))
        rows = [{"algorithm": name[: -len(suffix)], **self.get_histogram_stats(name)} for name in names]
        return pd.DataFrame(rows, columns=["algorithm", *STATS_COLUMNS])

    def reset(self) -> None:
        """清空所有指标."""
        with self._lock:
            self._counters.clear()
            self._histograms.clear()
        logger.debug("指标已清空")


# 全局指标收集器实例
_global_collector: Optional[MetricsCollector] = None


def get_metrics_collector() -> MetricsCollector:
    """获取全局指标收集器.

    Returns:
        指标收集器实例
    """
    global _global_collector
    if _global_collector is None:
        _global_collector = MetricsCollector()
    return _global_collector


def reset_metrics_collector() -> None:
    """清空全局指标收集器（命令行每次调用开始时执行）."""
    if _global_collector is not None:
        _global_collector.reset()
