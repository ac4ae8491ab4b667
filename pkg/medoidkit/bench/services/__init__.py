"""基准测试服务."""

from medoidkit.bench.services.report import (
    CsvRecordWriter,
    fit_loglog_slope,
    format_summary,
    read_records,
    records_to_frame,
    summarize,
    write_records,
)
from medoidkit.bench.services.runner import run_kmedoids, run_medoid
from medoidkit.bench.services.sweep import SweepRunner, sweep

__all__ = [
    "run_medoid",
    "run_kmedoids",
    "sweep",
    "SweepRunner",
    "CsvRecordWriter",
    "read_records",
    "write_records",
    "records_to_frame",
    "summarize",
    "format_summary",
    "fit_loglog_slope",
]
