"""基础设施工具模块."""

from medoidkit.infrastructure.utils.logger import LoggerMixin, get_logger, setup_logger
from medoidkit.infrastructure.utils.metrics import (
    MetricsCollector,
    get_metrics_collector,
    reset_metrics_collector,
)

__all__ = [
    "setup_logger",
    "get_logger",
    "LoggerMixin",
    "MetricsCollector",
    "get_metrics_collector",
    "reset_metrics_collector",
]
